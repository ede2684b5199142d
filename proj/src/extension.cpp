#include "lipext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace lipext {

namespace {

struct Line {
  PlanePoint point;
  PlanePoint dir;  // unit
};

struct Circle {
  PlanePoint center;
  double radius;
};

using Locus = std::variant<Line, Circle>;

double cross(PlanePoint u, PlanePoint v) {
  return u.real() * v.imag() - u.imag() * v.real();
}

double dot(PlanePoint u, PlanePoint v) {
  return u.real() * v.real() + u.imag() * v.imag();
}

/// {z : w1 |z - q1| = w2 |z - q2|}; empty for coincident points with
/// distinct weights.
std::optional<Locus> equal_value_locus(PlanePoint q1, double w1, PlanePoint q2,
                                       double w2) {
  if (q1 == q2) return std::nullopt;
  const Region region = apollonius_locus(q1, q2, w2 / w1);
  if (const auto* h = std::get_if<HalfPlane>(&region)) {
    return Locus{Line{h->offset * h->normal,
                      PlanePoint(-h->normal.imag(), h->normal.real())}};
  }
  const auto& d = std::get<Disc>(region);
  return Locus{Circle{d.center, d.radius}};
}

void intersect_lines(const Line& a, const Line& b,
                     std::vector<PlanePoint>& out) {
  const double denom = cross(a.dir, b.dir);
  if (std::abs(denom) < 1e-14) return;
  const double t = cross(b.point - a.point, b.dir) / denom;
  out.push_back(a.point + t * a.dir);
}

void intersect_line_circle(const Line& l, const Circle& c,
                           std::vector<PlanePoint>& out) {
  const double t0 = dot(c.center - l.point, l.dir);
  const PlanePoint foot = l.point + t0 * l.dir;
  const double h2 = c.radius * c.radius - std::norm(c.center - foot);
  const double tol = 1e-12 * (c.radius * c.radius + 1.0);
  if (h2 < -tol) return;
  const double h = std::sqrt(std::max(0.0, h2));
  out.push_back(foot + h * l.dir);
  if (h > 0.0) out.push_back(foot - h * l.dir);
}

void intersect_circles(const Circle& a, const Circle& b,
                       std::vector<PlanePoint>& out) {
  const double d = std::abs(b.center - a.center);
  if (d < 1e-14) return;
  const double s = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h2 = a.radius * a.radius - s * s;
  const double tol = 1e-12 * (a.radius * a.radius + b.radius * b.radius + 1.0);
  if (h2 < -tol) return;
  const double h = std::sqrt(std::max(0.0, h2));
  const PlanePoint u = (b.center - a.center) / d;
  const PlanePoint perp(-u.imag(), u.real());
  out.push_back(a.center + s * u + h * perp);
  if (h > 0.0) out.push_back(a.center + s * u - h * perp);
}

void intersect_loci(const Locus& a, const Locus& b,
                    std::vector<PlanePoint>& out) {
  if (const auto* la = std::get_if<Line>(&a)) {
    if (const auto* lb = std::get_if<Line>(&b)) {
      intersect_lines(*la, *lb, out);
    } else {
      intersect_line_circle(*la, std::get<Circle>(b), out);
    }
    return;
  }
  const auto& ca = std::get<Circle>(a);
  if (const auto* lb = std::get_if<Line>(&b)) {
    intersect_line_circle(*lb, ca, out);
  } else {
    intersect_circles(ca, std::get<Circle>(b), out);
  }
}

double eval_minimax(const std::vector<PlanePoint>& points,
                    const std::vector<double>& weights, PlanePoint z) {
  double value = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    value = std::max(value, weights[i] * std::abs(z - points[i]));
  }
  return value;
}

/// Candidate enumeration over a subset of indices; returns the best point
/// and its value against that subset only.
std::pair<PlanePoint, double> solve_subset(
    const std::vector<PlanePoint>& points, const std::vector<double>& weights,
    const std::vector<int>& subset) {
  auto value_on_subset = [&](PlanePoint z) {
    double v = 0.0;
    for (int i : subset) v = std::max(v, weights[i] * std::abs(z - points[i]));
    return v;
  };
  PlanePoint best = points[subset[0]];
  double best_value = value_on_subset(best);
  auto consider = [&](PlanePoint z) {
    const double v = value_on_subset(z);
    if (v < best_value) {
      best_value = v;
      best = z;
    }
  };
  for (size_t a = 1; a < subset.size(); ++a) consider(points[subset[a]]);
  for (size_t a = 0; a < subset.size(); ++a) {
    for (size_t b = a + 1; b < subset.size(); ++b) {
      const int i = subset[a], j = subset[b];
      if (points[i] == points[j]) continue;
      const double t = weights[j] / (weights[i] + weights[j]);
      consider(points[i] + t * (points[j] - points[i]));
    }
  }
  std::vector<PlanePoint> crossings;
  for (size_t a = 0; a < subset.size(); ++a) {
    for (size_t b = a + 1; b < subset.size(); ++b) {
      for (size_t c = b + 1; c < subset.size(); ++c) {
        const int i = subset[a], j = subset[b], k = subset[c];
        const auto lij = equal_value_locus(points[i], weights[i], points[j], weights[j]);
        const auto ljk = equal_value_locus(points[j], weights[j], points[k], weights[k]);
        if (!lij || !ljk) continue;
        crossings.clear();
        intersect_loci(*lij, *ljk, crossings);
        for (const auto& z : crossings) consider(z);
      }
    }
  }
  return {best, best_value};
}

}  // namespace

OneCenterSolution one_center(const std::vector<PlanePoint>& points,
                             const std::vector<double>& weights) {
  if (points.empty()) {
    throw Error(ErrorKind::EmptyInput, "one_center needs at least one point");
  }
  if (points.size() != weights.size()) {
    throw Error(ErrorKind::SchemaError,
                "one_center: points and weights differ in length");
  }
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw Error(ErrorKind::NonpositiveWeight,
                  "one_center weights must be positive");
    }
  }
  std::vector<int> all(points.size());
  for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);

  OneCenterSolution sol;
  auto [z, value] = solve_subset(points, weights, all);
  sol.z_star = z;
  sol.value = value;

  // Support: the smallest active subset whose own optimum already attains
  // the full value.
  const double active_tol = 1e-7 * (1.0 + sol.value);
  std::vector<int> active;
  for (size_t i = 0; i < points.size(); ++i) {
    if (weights[i] * std::abs(sol.z_star - points[i]) >= sol.value - active_tol) {
      active.push_back(static_cast<int>(i));
    }
  }
  auto attains = [&](const std::vector<int>& subset) {
    return std::abs(solve_subset(points, weights, subset).second - sol.value) <=
           active_tol;
  };
  if (points.size() == 1 || sol.value <= active_tol) {
    sol.support = {0};
    return sol;
  }
  for (size_t a = 0; a < active.size() && sol.support.empty(); ++a) {
    for (size_t b = a + 1; b < active.size() && sol.support.empty(); ++b) {
      if (attains({active[a], active[b]})) sol.support = {active[a], active[b]};
    }
  }
  for (size_t a = 0; a < active.size() && sol.support.empty(); ++a) {
    for (size_t b = a + 1; b < active.size() && sol.support.empty(); ++b) {
      for (size_t c = b + 1; c < active.size() && sol.support.empty(); ++c) {
        if (attains({active[a], active[b], active[c]})) {
          sol.support = {active[a], active[b], active[c]};
        }
      }
    }
  }
  if (sol.support.empty()) {
    active.resize(std::min<size_t>(active.size(), 3));
    sol.support = active;
  }
  return sol;
}

const char* extension_rule_name(ExtensionRule rule) {
  switch (rule) {
    case ExtensionRule::TriangleClosedForm: return "TriangleClosedForm";
    case ExtensionRule::TetragonDiagonal: return "TetragonDiagonal";
    case ExtensionRule::PolygonCenter: return "PolygonCenter";
    case ExtensionRule::Average: return "Average";
    case ExtensionRule::OneCenterOptimal: return "OneCenterOptimal";
    case ExtensionRule::HellyFeasible: return "HellyFeasible";
  }
  return "Unknown";
}

namespace {

ExtensionReport build_report(const MetricFunction& f0,
                             const std::map<std::string, PlanePoint>& chosen,
                             ExtensionRule rule) {
  ExtensionReport report;
  report.rule = rule;
  report.chosen_points = chosen;
  report.base_p_alpha = lipschitz_number(f0).p_alpha;
  report.extended = extend_with(f0, chosen);
  report.new_p_alpha = lipschitz_number(report.extended).p_alpha;
  if (std::abs(report.new_p_alpha - report.base_p_alpha) <=
      1e-9 * (1.0 + report.base_p_alpha)) {
    report.ratio = 1.0;
  } else if (report.base_p_alpha > 0.0) {
    report.ratio = report.new_p_alpha / report.base_p_alpha;
  }
  return report;
}

/// Weighted one-center data of the single-point extension problem at e.
struct ApexProblem {
  std::vector<std::string> labels;
  std::vector<PlanePoint> points;
  std::vector<double> weights;  // 1 / d(e, x)^alpha
};

ApexProblem apex_problem(const MetricFunction& f0, const std::string& e) {
  const int ei = f0.space->index_of(e);
  if (f0.defined_at(e)) {
    throw Error(ErrorKind::AlreadyDefined, "value at " + e + " already set",
                {{"label", e}});
  }
  ApexProblem prob;
  for (const auto& [label, value] : f0.values) {
    prob.labels.push_back(label);
    prob.points.push_back(value);
    prob.weights.push_back(
        1.0 / std::pow(f0.space->distance(f0.space->index_of(label), ei),
                       f0.alpha));
  }
  return prob;
}

double angle_threshold(double l) {
  return std::asin(std::min(1.0, 1.0 / (2.0 * l)));
}

/// The discrete-apex shape around e, or WrongMetricShape.
double require_apex_shape(const MetricFunction& f0, const std::string& e) {
  const auto shape = detect_discrete_apex(*f0.space);
  if (!shape || f0.space->labels()[shape->apex_index] != e) {
    throw Error(ErrorKind::WrongMetricShape,
                "space is not discrete-apex shaped around " + e);
  }
  for (const auto& [label, value] : f0.values) {
    if (label == e) {
      throw Error(ErrorKind::AlreadyDefined, "value at " + e + " already set");
    }
  }
  return shape->l;
}

void require_alpha_one(const MetricFunction& f0) {
  if (f0.alpha != 1.0) {
    throw Error(ErrorKind::AlphaNotOne, "rule requires alpha = 1");
  }
}

}  // namespace

ExtensionReport optimal_one_point_extension(const MetricFunction& f0,
                                            const std::string& e) {
  const auto prob = apex_problem(f0, e);
  const auto sol = one_center(prob.points, prob.weights);
  return build_report(f0, {{e, sol.z_star}}, ExtensionRule::OneCenterOptimal);
}

ExtensionReport triangle_extension(const MetricFunction& f0,
                                   const std::string& e) {
  require_apex_shape(f0, e);
  require_alpha_one(f0);
  if (!is_n_polygon(f0, 3)) {
    throw Error(ErrorKind::NotATriangle, "range is not a nondegenerate triangle");
  }
  const auto range = distinct_range(f0);
  const NormalTriangle nt = normalize(Triangle{range[0], range[1], range[2]});
  const PlanePoint chosen_normal =
      classify_apex(nt) == ApexClass::InD1
          ? PlanePoint(nt.base_length / 2.0, 0.0)
          : circumcenter(nt);
  const PlanePoint chosen = nt.motion.invert(chosen_normal);
  return build_report(f0, {{e, chosen}}, ExtensionRule::TriangleClosedForm);
}

bool equality_criterion(const MetricFunction& f0, double l) {
  if (l < 0.5) {
    throw Error(ErrorKind::ApexTooClose, "apex distance below 1/2");
  }
  if (!is_n_polygon(f0, 3)) {
    throw Error(ErrorKind::NotATriangle, "range is not a nondegenerate triangle");
  }
  const auto range = distinct_range(f0);
  const double theta =
      largest_angle(normalize(Triangle{range[0], range[1], range[2]}));
  return theta >= angle_threshold(l) - 1e-9;
}

ExtensionReport tetragon_extension(const MetricFunction& f0,
                                   const std::string& e, double l) {
  const double l_space = require_apex_shape(f0, e);
  if (std::abs(l_space - l) > 1e-9 * (1.0 + l)) {
    throw Error(ErrorKind::WrongMetricShape,
                "given apex distance disagrees with the space");
  }
  require_alpha_one(f0);
  if (l < 0.5) throw Error(ErrorKind::ApexTooClose, "apex distance below 1/2");
  if (!is_n_polygon(f0, 4)) {
    throw Error(ErrorKind::NotATetragon, "range is not a convex tetragon");
  }
  const auto hull = convex_hull_vertices(distinct_range(f0));
  std::array<double, 4> angle{};
  for (int k = 0; k < 4; ++k) {
    const PlanePoint v = hull[static_cast<size_t>(k)];
    const PlanePoint prev = hull[static_cast<size_t>((k + 3) % 4)];
    const PlanePoint next = hull[static_cast<size_t>((k + 1) % 4)];
    const PlanePoint u1 = prev - v;
    const PlanePoint u2 = next - v;
    angle[static_cast<size_t>(k)] = std::acos(std::clamp(
        dot(u1, u2) / (std::abs(u1) * std::abs(u2)), -1.0, 1.0));
  }
  const double threshold = angle_threshold(l) - 1e-9;
  const bool pair02 = angle[0] >= threshold && angle[2] >= threshold;
  const bool pair13 = angle[1] >= threshold && angle[3] >= threshold;
  if (!pair02 && !pair13) {
    throw Error(ErrorKind::AngleConditionFails,
                "no opposite vertex pair meets the angle condition",
                {{"min_angle_02", std::to_string(std::min(angle[0], angle[2]))},
                 {"min_angle_13", std::to_string(std::min(angle[1], angle[3]))},
                 {"threshold", std::to_string(angle_threshold(l))}});
  }
  int chosen_pair;
  if (pair02 && pair13) {
    // Both qualify: take the pair containing the lexicographically smallest
    // vertex.
    int smallest = 0;
    for (int k = 1; k < 4; ++k) {
      const PlanePoint a = hull[static_cast<size_t>(k)];
      const PlanePoint b = hull[static_cast<size_t>(smallest)];
      if (a.real() < b.real() ||
          (a.real() == b.real() && a.imag() < b.imag())) {
        smallest = k;
      }
    }
    chosen_pair = smallest % 2;
  } else {
    chosen_pair = pair02 ? 0 : 1;
  }
  // Midpoint of the diagonal joining the *other* pair.
  const PlanePoint value =
      0.5 * (hull[static_cast<size_t>(1 - chosen_pair)] +
             hull[static_cast<size_t>(3 - chosen_pair)]);
  return build_report(f0, {{e, value}}, ExtensionRule::TetragonDiagonal);
}

ExtensionReport polygon_extension(const MetricFunction& f0,
                                  const std::string& e, double l) {
  const double l_space = require_apex_shape(f0, e);
  if (std::abs(l_space - l) > 1e-9 * (1.0 + l)) {
    throw Error(ErrorKind::WrongMetricShape,
                "given apex distance disagrees with the space");
  }
  require_alpha_one(f0);
  if (l < 0.5) throw Error(ErrorKind::ApexTooClose, "apex distance below 1/2");
  const auto range = distinct_range(f0);
  const int n = static_cast<int>(range.size());
  if (n < 3) {
    throw Error(ErrorKind::NotRegularPolygon, "fewer than 3 distinct values");
  }
  PlanePoint center{0.0, 0.0};
  for (const auto& v : range) center += v;
  center /= static_cast<double>(n);
  double min_radius = std::numeric_limits<double>::infinity();
  double max_radius = 0.0;
  for (const auto& v : range) {
    const double r = std::abs(v - center);
    min_radius = std::min(min_radius, r);
    max_radius = std::max(max_radius, r);
  }
  if (!(max_radius > 0.0) || max_radius - min_radius > 1e-6 * max_radius) {
    throw Error(ErrorKind::NotRegularPolygon, "vertex radii are not equal");
  }
  std::vector<PlanePoint> ordered = range;
  std::sort(ordered.begin(), ordered.end(), [&](PlanePoint a, PlanePoint b) {
    return std::arg(a - center) < std::arg(b - center);
  });
  double min_gap = std::numeric_limits<double>::infinity();
  double max_gap = 0.0;
  for (int k = 0; k < n; ++k) {
    const double gap = std::abs(ordered[static_cast<size_t>((k + 1) % n)] -
                                ordered[static_cast<size_t>(k)]);
    min_gap = std::min(min_gap, gap);
    max_gap = std::max(max_gap, gap);
  }
  if (max_gap - min_gap > 1e-6 * max_gap) {
    throw Error(ErrorKind::NotRegularPolygon, "side lengths are not equal");
  }
  return build_report(f0, {{e, center}}, ExtensionRule::PolygonCenter);
}

ExtensionReport average_extension(const MetricFunction& f0,
                                  const std::vector<std::string>& targets) {
  if (targets.empty()) {
    throw Error(ErrorKind::EmptyTargets, "no targets to extend over");
  }
  PlanePoint mean{0.0, 0.0};
  for (const auto& [label, value] : f0.values) mean += value;
  mean /= static_cast<double>(f0.values.size());
  std::map<std::string, PlanePoint> chosen;
  for (const auto& t : targets) {
    f0.space->index_of(t);
    if (f0.defined_at(t)) {
      throw Error(ErrorKind::OverlappingDomain,
                  "target already in the domain: " + t, {{"label", t}});
    }
    chosen[t] = mean;
  }
  return build_report(f0, chosen, ExtensionRule::Average);
}

bool check_average_hypothesis(const FiniteMetricSpace& space,
                              const PointSubset& domain,
                              const PointSubset& targets) {
  if (domain.members.empty() || targets.members.empty()) {
    throw Error(ErrorKind::EmptySet, "hypothesis check on empty set");
  }
  for (int t : targets.members) {
    for (int y : domain.members) {
      if (t == y) {
        throw Error(ErrorKind::SetsOverlap,
                    "targets and domain share a point");
      }
    }
  }
  for (int t : targets.members) {
    for (int y : domain.members) {
      const double dty = space.distance(t, y);
      for (int z : domain.members) {
        if (dty < space.distance(y, z)) return false;
      }
    }
  }
  return true;
}

HellyResult helly_feasible(const MetricFunction& f0, const std::string& e,
                           double budget, bool norm_preserving) {
  if (!(budget >= 0.0)) {
    throw Error(ErrorKind::SchemaError, "budget must be >= 0");
  }
  const auto prob = apex_problem(f0, e);
  HellyResult result;
  if (budget == 0.0) {
    const PlanePoint z = prob.points.front();
    for (const auto& q : prob.points) {
      if (q != z) return result;  // distinct values, infeasible
    }
    result.feasible = true;
    result.point = z;
    result.required = 0.0;
    return result;
  }
  if (!norm_preserving) {
    const auto sol = one_center(prob.points, prob.weights);
    result.required = sol.value;
    if (sol.value <= budget + 1e-9) {
      result.feasible = true;
      result.point = sol.z_star;
    }
    return result;
  }
  // Rescale so every disc has the form |z - c| <= R, including the sup-norm
  // ball; feasible iff min max |z - c_i| / R_i <= 1.
  const double sup = lipschitz_number(f0).sup_norm;
  if (sup == 0.0) {
    // All values are 0, so f(e) must be 0 as well; always inside the discs.
    result.feasible = true;
    result.point = PlanePoint{0.0, 0.0};
    return result;
  }
  std::vector<PlanePoint> points = prob.points;
  std::vector<double> weights;
  weights.reserve(points.size() + 1);
  for (double w : prob.weights) weights.push_back(w / budget);
  points.emplace_back(0.0, 0.0);
  weights.push_back(1.0 / sup);
  const auto sol = one_center(points, weights);
  if (sol.value <= 1.0 + 1e-9) {
    result.feasible = true;
    result.point = sol.z_star;
  }
  return result;
}

namespace {

/// Signed violation of one convex constraint: <= 0 inside.
struct ConvexConstraint {
  // disc: |z - a| - b;  halfplane: <unit n, z> - b
  bool is_disc = true;
  PlanePoint a;
  double b = 0.0;

  double violation(PlanePoint z) const {
    if (is_disc) return std::abs(z - a) - b;
    return dot(a, z) - b;
  }
};

double dot(PlanePoint u, PlanePoint v);  // from the outer anonymous namespace

/// Minimize max_j violation by grid sampling with sound interval
/// localization: any upper bound v confines the minimizer to
/// {z : |z - a_j| <= b_j + v} for every disc constraint.
std::pair<PlanePoint, double> minimize_violation(
    const std::vector<ConvexConstraint>& constraints,
    const std::vector<PlanePoint>& seeds) {
  auto value = [&](PlanePoint z) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& c : constraints) v = std::max(v, c.violation(z));
    return v;
  };
  PlanePoint best = seeds.front();
  double best_value = value(best);
  for (const auto& s : seeds) {
    const double v = value(s);
    if (v < best_value) {
      best_value = v;
      best = s;
    }
  }
  // Initial box from the disc constraints at the current upper bound.
  auto localize = [&](double v, double& lo_x, double& hi_x, double& lo_y,
                      double& hi_y) {
    lo_x = lo_y = -std::numeric_limits<double>::infinity();
    hi_x = hi_y = std::numeric_limits<double>::infinity();
    for (const auto& c : constraints) {
      if (!c.is_disc) continue;
      const double reach = c.b + v;
      lo_x = std::max(lo_x, c.a.real() - reach);
      hi_x = std::min(hi_x, c.a.real() + reach);
      lo_y = std::max(lo_y, c.a.imag() - reach);
      hi_y = std::min(hi_y, c.a.imag() + reach);
    }
  };
  const int res = 24;
  for (int round = 0; round < 60; ++round) {
    double lo_x, hi_x, lo_y, hi_y;
    localize(best_value, lo_x, hi_x, lo_y, hi_y);
    if (!(std::isfinite(lo_x) && std::isfinite(hi_x) && std::isfinite(lo_y) &&
          std::isfinite(hi_y))) {
      break;  // no disc constraint; seeds already decide
    }
    if (hi_x < lo_x || hi_y < lo_y) break;  // empty bound, best is settled
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);
    if (span < 1e-14 * (1.0 + std::abs(best))) break;
    for (int i = 0; i <= res; ++i) {
      for (int j = 0; j <= res; ++j) {
        const PlanePoint z(lo_x + (hi_x - lo_x) * i / res,
                           lo_y + (hi_y - lo_y) * j / res);
        const double v = value(z);
        if (v < best_value) {
          best_value = v;
          best = z;
        }
      }
    }
  }
  return {best, best_value};
}

}  // namespace

ChainResult chained_feasible(const MetricFunction& f0,
                             const std::vector<std::string>& ordered_labels,
                             const std::string& e, double budget) {
  const int ei = f0.space->index_of(e);
  if (f0.defined_at(e)) {
    throw Error(ErrorKind::AlreadyDefined, "value at " + e + " already set");
  }
  if (ordered_labels.size() != f0.values.size()) {
    throw Error(ErrorKind::BadOrdering,
                "ordering must list every domain label exactly once");
  }
  std::vector<PlanePoint> q;
  std::vector<double> d;
  for (const auto& label : ordered_labels) {
    if (!f0.defined_at(label)) {
      throw Error(ErrorKind::BadOrdering,
                  "ordering names a label outside the domain: " + label);
    }
    q.push_back(f0.values.at(label));
    d.push_back(f0.space->distance(f0.space->index_of(label), ei));
  }
  const size_t n = q.size();
  for (size_t j = 0; j + 1 < n; ++j) {
    if (d[j] > d[j + 1]) {
      throw Error(ErrorKind::BadOrdering,
                  "labels must be ordered by nondecreasing distance from " + e);
    }
  }
  std::vector<ConvexConstraint> constraints;
  double scale = 1.0;
  for (size_t j = 0; j + 1 < n; ++j) {
    scale = std::max(scale, std::abs(q[j]));
    const double k = std::pow(d[j] / d[j + 1], f0.alpha);
    if (q[j] == q[j + 1]) {
      if (k >= 1.0) continue;            // whole plane
      constraints.push_back({true, q[j], 0.0});  // the single point q_j
      continue;
    }
    const Region region = apollonius_locus(q[j], q[j + 1], k);
    if (const auto* h = std::get_if<HalfPlane>(&region)) {
      constraints.push_back({false, h->normal, h->offset});
    } else {
      const auto& disc = std::get<Disc>(region);
      constraints.push_back({true, disc.center, disc.radius});
    }
  }
  constraints.push_back(
      {true, q[n - 1], std::pow(d[n - 1], f0.alpha) * budget});
  scale = std::max(scale, std::abs(q[n - 1]));

  std::vector<PlanePoint> seeds = q;
  // Refine around the unordered feasibility point; it often already lies in
  // the chain intersection.
  std::vector<double> weights;
  for (size_t j = 0; j < n; ++j) weights.push_back(1.0 / std::pow(d[j], f0.alpha));
  seeds.push_back(one_center(q, weights).z_star);

  const auto [z, violation] = minimize_violation(constraints, seeds);
  ChainResult result;
  if (violation <= 1e-9 * (1.0 + scale)) {
    result.feasible = true;
    result.point = z;
  }
  return result;
}

bool discs_have_common_point(const std::vector<Disc>& discs) {
  if (discs.empty()) return true;
  const double tol = [&] {
    double scale = 0.0;
    for (const auto& d : discs) {
      scale = std::max({scale, d.radius, std::abs(d.center)});
    }
    return 1e-12 * (1.0 + scale);
  }();
  auto inside = [&](PlanePoint z, const Disc& d) {
    return std::abs(z - d.center) <= d.radius + tol;
  };
  if (discs.size() == 1) return true;
  auto pair_ok = [&](const Disc& a, const Disc& b) {
    return std::abs(a.center - b.center) <= a.radius + b.radius + tol;
  };
  if (discs.size() == 2) return pair_ok(discs[0], discs[1]);
  if (discs.size() > 3) {
    throw Error(ErrorKind::SchemaError,
                "discs_have_common_point handles at most 3 discs");
  }
  for (int i = 0; i < 3; ++i) {
    if (!pair_ok(discs[static_cast<size_t>(i)], discs[static_cast<size_t>((i + 1) % 3)])) {
      return false;
    }
  }
  // dist(c_k, D_i cap D_j) <= r_k for each assignment of the third disc.
  for (int k = 0; k < 3; ++k) {
    const Disc& dk = discs[static_cast<size_t>(k)];
    const Disc& di = discs[static_cast<size_t>((k + 1) % 3)];
    const Disc& dj = discs[static_cast<size_t>((k + 2) % 3)];
    if (inside(dk.center, di) && inside(dk.center, dj)) return true;
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](PlanePoint p, bool valid) {
      if (valid) best = std::min(best, std::abs(p - dk.center));
    };
    const double dist_i = std::abs(dk.center - di.center);
    if (dist_i > 1e-15) {
      const PlanePoint proj =
          di.center + di.radius * (dk.center - di.center) / dist_i;
      consider(proj, inside(proj, dj));
    }
    const double dist_j = std::abs(dk.center - dj.center);
    if (dist_j > 1e-15) {
      const PlanePoint proj =
          dj.center + dj.radius * (dk.center - dj.center) / dist_j;
      consider(proj, inside(proj, di));
    }
    std::vector<PlanePoint> corners;
    intersect_circles(Circle{di.center, di.radius}, Circle{dj.center, dj.radius},
                      corners);
    for (const auto& c : corners) consider(c, true);
    if (best <= dk.radius + tol) return true;
  }
  return false;
}

}  // namespace lipext
