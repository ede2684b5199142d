#ifndef LIPEXT_LIPSCHITZ_HPP
#define LIPEXT_LIPSCHITZ_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lipext/metric_space.hpp"
#include "lipext/plane_geometry.hpp"

namespace lipext {

/// A partial assignment of plane values to points of a space, together with
/// the Holder exponent. The domain is the set of labels carrying a value.
struct MetricFunction {
  SpacePtr space;
  double alpha = 1.0;
  std::map<std::string, PlanePoint> values;  // ordered by label

  MetricFunction() = default;
  MetricFunction(SpacePtr space, double alpha,
                 std::map<std::string, PlanePoint> values);

  bool defined_at(const std::string& label) const {
    return values.count(label) > 0;
  }
};

struct LipschitzReport {
  double p_alpha = 0.0;
  double sup_norm = 0.0;
  double alpha_norm = 0.0;  // p_alpha + sup_norm
  std::optional<std::pair<std::string, std::string>> witness;
};

/// max over distinct domain pairs of |f(x) - f(y)| / d(x,y)^alpha, plus the
/// sup norm. Witness ties break lexicographically.
LipschitzReport lipschitz_number(const MetricFunction& f);

/// True iff the range has exactly n distinct values (separation 1e-9) and
/// those values are in convex position.
bool is_n_polygon(const MetricFunction& f, int n);

/// Distinct range values (1e-9 separation), in domain-label order of first
/// appearance.
std::vector<PlanePoint> distinct_range(const MetricFunction& f);

/// Merges new point values into a function; the original values are kept
/// untouched and must not be re-assigned.
MetricFunction extend_with(const MetricFunction& f0,
                           const std::map<std::string, PlanePoint>& assignments);

}  // namespace lipext

#endif
