#ifndef LIPEXT_ERRORS_HPP
#define LIPEXT_ERRORS_HPP

#include <map>
#include <stdexcept>
#include <string>

namespace lipext {

/// Every failure the library reports, by name. The CLI maps these onto
/// exit-code classes (schema / metric / domain / rule-precondition).
enum class ErrorKind {
  // input / schema
  SchemaError,
  // metric construction
  NotSymmetric,
  NegativeDistance,
  ZeroOffDiagonal,
  NonzeroDiagonal,
  TriangleViolation,
  ApexTooClose,
  BadExponent,
  // domain / argument
  EmptySet,
  SetsOverlap,
  SetsTouch,
  EmptyDomain,
  OverlappingDomain,
  UnknownLabel,
  AlreadyDefined,
  EmptyTargets,
  EmptyInput,
  NonpositiveWeight,
  CoincidentPoints,
  NonpositiveRatio,
  BadOrdering,
  DegenerateTriangle,
  BadCount,
  BadSide,
  BoxTooSmall,
  SpaceMismatch,
  // rule preconditions
  NotATriangle,
  NotATetragon,
  NotRegularPolygon,
  AngleConditionFails,
  WrongMetricShape,
  AlphaNotOne,
};

const char* error_kind_name(ErrorKind kind);

/// Exit-code class used by the CLI: 2 schema, 3 metric, 4 domain, 5 rule.
int error_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(ErrorKind kind, std::string message,
        std::map<std::string, std::string> details)
      : std::runtime_error(std::move(message)),
        kind_(kind),
        details_(std::move(details)) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }
  const std::map<std::string, std::string>& details() const { return details_; }

 private:
  ErrorKind kind_;
  std::map<std::string, std::string> details_;
};

}  // namespace lipext

#endif
