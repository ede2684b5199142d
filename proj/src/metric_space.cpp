#include "lipext/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace lipext {

namespace {

std::vector<std::string> default_labels(size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
  return labels;
}

}  // namespace

int FiniteMetricSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownLabel, "unknown point label: " + label,
                {{"label", label}});
  }
  return it->second;
}

bool FiniteMetricSpace::same_space(const FiniteMetricSpace& other) const {
  if (this == &other) return true;
  return labels_ == other.labels_ && dist_ == other.dist_;
}

// The class has no public constructor; construction funnels through here.
struct SpaceBuilder {
  static std::shared_ptr<const FiniteMetricSpace> build(
      const std::vector<std::vector<double>>& matrix,
      std::vector<std::string> labels) {
    const size_t n = matrix.size();
    if (labels.empty()) labels = default_labels(n);
    if (labels.size() != n) {
      throw Error(ErrorKind::SchemaError,
                  "label count does not match matrix size");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::SchemaError, "duplicate point label: " + l,
                    {{"label", l}});
      }
    }
    std::shared_ptr<FiniteMetricSpace> space(new FiniteMetricSpace());
    space->n_ = static_cast<int>(n);
    space->labels_ = std::move(labels);
    space->dist_.resize(n * n);
    for (size_t i = 0; i < n; ++i) {
      if (matrix[i].size() != n) {
        throw Error(ErrorKind::SchemaError, "distance matrix is not square");
      }
      for (size_t j = 0; j < n; ++j) space->dist_[i * n + j] = matrix[i][j];
    }
    for (size_t i = 0; i < n; ++i) {
      space->index_[space->labels_[i]] = static_cast<int>(i);
    }
    return space;
  }
};

std::shared_ptr<const FiniteMetricSpace> FiniteMetricSpace::unchecked(
    std::vector<std::vector<double>> matrix, std::vector<std::string> labels) {
  return SpaceBuilder::build(matrix, std::move(labels));
}

std::shared_ptr<const FiniteMetricSpace> FiniteMetricSpace::validate(
    const std::vector<std::vector<double>>& matrix,
    std::vector<std::string> labels) {
  const size_t n = matrix.size();
  for (size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorKind::SchemaError, "distance matrix is not square");
    }
    for (size_t j = 0; j < n; ++j) {
      if (!std::isfinite(matrix[i][j])) {
        throw Error(ErrorKind::SchemaError, "distance matrix has a non-finite entry",
                    {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
      }
    }
  }
  auto idx = [](size_t i) { return std::to_string(i); };
  for (size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) {
      throw Error(ErrorKind::NonzeroDiagonal,
                  "d(" + idx(i) + "," + idx(i) + ") must be 0", {{"i", idx(i)}});
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] < 0.0) {
        throw Error(ErrorKind::NegativeDistance,
                    "d(" + idx(i) + "," + idx(j) + ") < 0",
                    {{"i", idx(i)}, {"j", idx(j)}});
      }
      if (matrix[i][j] == 0.0) {
        throw Error(ErrorKind::ZeroOffDiagonal,
                    "d(" + idx(i) + "," + idx(j) + ") = 0 for distinct points",
                    {{"i", idx(i)}, {"j", idx(j)}});
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw Error(ErrorKind::NotSymmetric,
                    "d(" + idx(i) + "," + idx(j) + ") != d(" + idx(j) + "," +
                        idx(i) + ")",
                    {{"i", idx(i)}, {"j", idx(j)}});
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double direct = matrix[i][j];
      for (size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double detour = matrix[i][k] + matrix[k][j];
        if (direct > detour + 1e-12 * std::max(direct, detour)) {
          throw Error(ErrorKind::TriangleViolation,
                      "d(" + idx(i) + "," + idx(j) + ") > d(" + idx(i) + "," +
                          idx(k) + ") + d(" + idx(k) + "," + idx(j) + ")",
                      {{"i", idx(i)}, {"k", idx(k)}, {"j", idx(j)}});
        }
      }
    }
  }
  return SpaceBuilder::build(matrix, std::move(labels));
}

PointSubset PointSubset::of_labels(SpacePtr space,
                                   const std::vector<std::string>& labels) {
  PointSubset subset;
  subset.space = std::move(space);
  std::set<int> members;
  for (const auto& l : labels) members.insert(subset.space->index_of(l));
  subset.members.assign(members.begin(), members.end());
  return subset;
}

SpacePtr discrete_apex(int n, double l) {
  if (n < 2) {
    throw Error(ErrorKind::BadCount, "discrete_apex needs at least 2 base points");
  }
  if (l < 0.5) {
    throw Error(ErrorKind::ApexTooClose,
                "apex distance " + std::to_string(l) +
                    " < 1/2 breaks the triangle inequality");
  }
  const size_t m = static_cast<size_t>(n) + 1;
  std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 1.0));
  for (size_t i = 0; i < m; ++i) matrix[i][i] = 0.0;
  for (size_t i = 0; i + 1 < m; ++i) {
    matrix[i][m - 1] = l;
    matrix[m - 1][i] = l;
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("e");
  return FiniteMetricSpace::unchecked(std::move(matrix), std::move(labels));
}

SpacePtr power_metric(const FiniteMetricSpace& space, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorKind::BadExponent,
                "power metric requires alpha in (0, 1]");
  }
  const int n = space.size();
  std::vector<std::vector<double>> matrix(static_cast<size_t>(n),
                                          std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      matrix[i][j] = std::pow(space.distance(i, j), alpha);
    }
  }
  return FiniteMetricSpace::validate(matrix, space.labels());
}

namespace {

void require_subset(const PointSubset& s, const char* what) {
  if (!s.space) throw Error(ErrorKind::EmptySet, std::string(what) + ": no space");
  if (s.members.empty()) {
    throw Error(ErrorKind::EmptySet, std::string(what) + ": empty point set");
  }
}

}  // namespace

double set_distance(const PointSubset& a, const PointSubset& b) {
  require_subset(a, "set_distance");
  require_subset(b, "set_distance");
  if (!a.space->same_space(*b.space)) {
    throw Error(ErrorKind::SpaceMismatch,
                "set_distance across different spaces");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i : a.members) {
    for (int j : b.members) best = std::min(best, a.space->distance(i, j));
  }
  return best;
}

double diameter(const PointSubset& m) {
  require_subset(m, "diameter");
  double best = 0.0;
  for (size_t i = 0; i < m.members.size(); ++i) {
    for (size_t j = i + 1; j < m.members.size(); ++j) {
      best = std::max(best, m.space->distance(m.members[i], m.members[j]));
    }
  }
  return best;
}

std::optional<DiscreteApexShape> detect_discrete_apex(
    const FiniteMetricSpace& space) {
  const int n = space.size();
  if (n < 3) return std::nullopt;
  const double tol = 1e-12;
  for (int apex = 0; apex < n; ++apex) {
    bool ok = true;
    double l = 0.0;
    for (int i = 0; i < n && ok; ++i) {
      if (i == apex) continue;
      const double di = space.distance(apex, i);
      if (l == 0.0) l = di;
      if (std::abs(di - l) > tol * std::max(1.0, l)) ok = false;
      for (int j = i + 1; j < n && ok; ++j) {
        if (j == apex) continue;
        if (std::abs(space.distance(i, j) - 1.0) > tol) ok = false;
      }
    }
    if (ok && l > 0.0) return DiscreteApexShape{apex, l};
  }
  return std::nullopt;
}

}  // namespace lipext
