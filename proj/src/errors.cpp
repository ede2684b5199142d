#include "lipext/errors.hpp"

namespace lipext {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NegativeDistance: return "NegativeDistance";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::ApexTooClose: return "ApexTooClose";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SetsOverlap: return "SetsOverlap";
    case ErrorKind::SetsTouch: return "SetsTouch";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::OverlappingDomain: return "OverlappingDomain";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::AlreadyDefined: return "AlreadyDefined";
    case ErrorKind::EmptyTargets: return "EmptyTargets";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NonpositiveRatio: return "NonpositiveRatio";
    case ErrorKind::BadOrdering: return "BadOrdering";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::BadCount: return "BadCount";
    case ErrorKind::BadSide: return "BadSide";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotATetragon: return "NotATetragon";
    case ErrorKind::NotRegularPolygon: return "NotRegularPolygon";
    case ErrorKind::AngleConditionFails: return "AngleConditionFails";
    case ErrorKind::WrongMetricShape: return "WrongMetricShape";
    case ErrorKind::AlphaNotOne: return "AlphaNotOne";
  }
  return "UnknownError";
}

int error_exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SchemaError:
      return 2;
    case ErrorKind::NotSymmetric:
    case ErrorKind::NegativeDistance:
    case ErrorKind::ZeroOffDiagonal:
    case ErrorKind::NonzeroDiagonal:
    case ErrorKind::TriangleViolation:
    case ErrorKind::ApexTooClose:
    case ErrorKind::BadExponent:
      return 3;
    case ErrorKind::NotATriangle:
    case ErrorKind::NotATetragon:
    case ErrorKind::NotRegularPolygon:
    case ErrorKind::AngleConditionFails:
    case ErrorKind::WrongMetricShape:
    case ErrorKind::AlphaNotOne:
      return 5;
    default:
      return 4;
  }
}

}  // namespace lipext
