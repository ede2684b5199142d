#include "lipext/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace lipext {

MetricFunction::MetricFunction(SpacePtr space_, double alpha_,
                               std::map<std::string, PlanePoint> values_)
    : space(std::move(space_)), alpha(alpha_), values(std::move(values_)) {
  if (!space) throw Error(ErrorKind::EmptyDomain, "function needs a space");
  if (values.empty()) {
    throw Error(ErrorKind::EmptyDomain, "function domain is empty");
  }
  if (!(alpha > 0.0)) {
    throw Error(ErrorKind::BadExponent, "alpha must be positive");
  }
  for (const auto& [label, value] : values) {
    space->index_of(label);  // throws UnknownLabel
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorKind::SchemaError, "non-finite value at " + label);
    }
  }
}

LipschitzReport lipschitz_number(const MetricFunction& f) {
  if (f.values.empty()) {
    throw Error(ErrorKind::EmptyDomain, "lipschitz_number on empty domain");
  }
  LipschitzReport report;
  for (const auto& [label, value] : f.values) {
    report.sup_norm = std::max(report.sup_norm, std::abs(value));
  }
  // std::map iterates labels lexicographically, so the first maximum found
  // is the lexicographically smallest witness.
  for (auto it = f.values.begin(); it != f.values.end(); ++it) {
    for (auto jt = std::next(it); jt != f.values.end(); ++jt) {
      const double d = f.space->distance(it->first, jt->first);
      const double quotient =
          std::abs(it->second - jt->second) / std::pow(d, f.alpha);
      if (quotient > report.p_alpha) {
        report.p_alpha = quotient;
        report.witness = {it->first, jt->first};
      }
    }
  }
  report.alpha_norm = report.p_alpha + report.sup_norm;
  return report;
}

std::vector<PlanePoint> distinct_range(const MetricFunction& f) {
  std::vector<PlanePoint> out;
  for (const auto& [label, value] : f.values) {
    bool fresh = true;
    for (const auto& seen : out) {
      if (std::abs(value - seen) <= 1e-9) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(value);
  }
  return out;
}

bool is_n_polygon(const MetricFunction& f, int n) {
  if (n < 3) return false;
  const auto range = distinct_range(f);
  if (static_cast<int>(range.size()) != n) return false;
  if (n == 3) {
    return !is_degenerate(Triangle{range[0], range[1], range[2]});
  }
  return static_cast<int>(convex_hull_vertices(range).size()) == n;
}

MetricFunction extend_with(
    const MetricFunction& f0,
    const std::map<std::string, PlanePoint>& assignments) {
  MetricFunction merged = f0;
  for (const auto& [label, value] : assignments) {
    if (f0.defined_at(label)) {
      throw Error(ErrorKind::OverlappingDomain,
                  "label already has a value: " + label, {{"label", label}});
    }
    f0.space->index_of(label);  // throws UnknownLabel
    merged.values[label] = value;
  }
  return merged;
}

}  // namespace lipext
