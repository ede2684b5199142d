#ifndef LIPEXT_EXTENSION_HPP
#define LIPEXT_EXTENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "lipext/lipschitz.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/plane_geometry.hpp"

namespace lipext {

/// Exact minimizer of g(z) = max_i w_i |z - q_i|. The planar optimum is
/// determined by at most three constraints; candidates are the points
/// themselves, pair equalizers on segments, and intersections of equal-value
/// Apollonius loci of triples.
struct OneCenterSolution {
  PlanePoint z_star;
  double value = 0.0;
  std::vector<int> support;  // at most 3 indices whose subproblem attains value
};

OneCenterSolution one_center(const std::vector<PlanePoint>& points,
                             const std::vector<double>& weights);

enum class ExtensionRule {
  TriangleClosedForm,
  TetragonDiagonal,
  PolygonCenter,
  Average,
  OneCenterOptimal,
  HellyFeasible,
};

const char* extension_rule_name(ExtensionRule rule);

struct ExtensionReport {
  MetricFunction extended;
  double base_p_alpha = 0.0;
  double new_p_alpha = 0.0;
  /// new/base; reported as exactly 1 when |new - base| <= 1e-9 (1 + base),
  /// absent when base is 0 and the increment is not negligible.
  std::optional<double> ratio;
  ExtensionRule rule = ExtensionRule::OneCenterOptimal;
  std::map<std::string, PlanePoint> chosen_points;
};

/// Value at e minimizing the resulting Lipschitz number: the weighted
/// one-center of the existing values with weights 1/d(e,x)^alpha.
ExtensionReport optimal_one_point_extension(const MetricFunction& f0,
                                            const std::string& e);

/// Closed-form rule for a triangle on a discrete-apex space with alpha = 1:
/// normalize, pick the base midpoint (apex in D1) or the circumcenter
/// (apex in D2), pull the point back through the recorded motion.
ExtensionReport triangle_extension(const MetricFunction& f0,
                                   const std::string& e);

/// True iff the triangle range has an angle >= arcsin(1/(2l)); equivalent to
/// the existence of an extension with unchanged Lipschitz number.
bool equality_criterion(const MetricFunction& f0, double l);

/// Convex 4-point range with one pair of opposite angles >= arcsin(1/(2l)):
/// the value at e is the midpoint of the other pair's diagonal.
ExtensionReport tetragon_extension(const MetricFunction& f0,
                                   const std::string& e, double l);

/// Regular n-gon range: the value at e is the polygon center, giving
/// max(D, E/l) with D the largest diameter and E the circumradius.
ExtensionReport polygon_extension(const MetricFunction& f0,
                                  const std::string& e, double l);

/// Assigns every target the mean of f0 over its whole domain. Preserves
/// p_alpha and the sup norm whenever check_average_hypothesis holds.
ExtensionReport average_extension(const MetricFunction& f0,
                                  const std::vector<std::string>& targets);

/// d(t, y) >= d(y, z) for every target t and all y, z in the domain.
bool check_average_hypothesis(const FiniteMetricSpace& space,
                              const PointSubset& domain,
                              const PointSubset& targets);

struct HellyResult {
  bool feasible = false;
  std::optional<PlanePoint> point;  // a point in every disc when feasible
  /// Smallest budget that is feasible (the one-center value); only set for
  /// the plain variant, not the norm-preserving one.
  std::optional<double> required;
};

/// Feasibility of the discs |z - f0(x)| <= d(x,e)^alpha * budget. With
/// norm_preserving, the ball |z| <= sup|f0| joins the family and feasibility
/// is decided on the jointly rescaled one-center problem.
HellyResult helly_feasible(const MetricFunction& f0, const std::string& e,
                           double budget, bool norm_preserving = false);

struct ChainResult {
  bool feasible = false;
  std::optional<PlanePoint> point;
};

/// Feasibility of the chain sets D_j = {|z - q_j| <= (d_j/d_{j+1})^alpha
/// |z - q_{j+1}|} together with the final disc |z - q_n| <= d_n^alpha budget.
/// The labels must be ordered with nondecreasing d(e, x_j) so every D_j is a
/// disc or half-plane.
ChainResult chained_feasible(const MetricFunction& f0,
                             const std::vector<std::string>& ordered_labels,
                             const std::string& e, double budget);

/// Exact common-point test for up to three closed discs; used to exercise
/// Helly's three-set criterion directly.
bool discs_have_common_point(const std::vector<Disc>& discs);

}  // namespace lipext

#endif
