#ifndef LIPEXT_METRIC_SPACE_HPP
#define LIPEXT_METRIC_SPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

/// A labeled point set with a validated distance matrix. Immutable after
/// construction; shared by reference between functions and subsets.
class FiniteMetricSpace {
 public:
  /// Checks symmetry, signs, the diagonal and the triangle inequality
  /// (relative tolerance 1e-12). Never repairs; throws on the first
  /// violation, naming the offending indices. Empty `labels` auto-generates
  /// p1..pn.
  static std::shared_ptr<const FiniteMetricSpace> validate(
      const std::vector<std::vector<double>>& matrix,
      std::vector<std::string> labels = {});

  /// Trusts the caller that `matrix` is a metric; for generated families
  /// whose validity is known a priori.
  static std::shared_ptr<const FiniteMetricSpace> unchecked(
      std::vector<std::vector<double>> matrix, std::vector<std::string> labels);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double distance(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }
  double distance(const std::string& a, const std::string& b) const {
    return distance(index_of(a), index_of(b));
  }
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const {
    return index_.count(label) > 0;
  }

  bool same_space(const FiniteMetricSpace& other) const;

 private:
  friend struct SpaceBuilder;
  FiniteMetricSpace() = default;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> dist_;  // row-major n x n
  std::unordered_map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// A nonempty selection of points of one space.
struct PointSubset {
  SpacePtr space;
  std::vector<int> members;  // distinct, ascending

  static PointSubset of_labels(SpacePtr space,
                               const std::vector<std::string>& labels);
};

/// n base points pairwise at distance 1 plus an apex "e" at distance l from
/// every base point; a metric exactly when l >= 1/2. Base labels are x1..xn.
SpacePtr discrete_apex(int n, double l);

/// Entrywise d^alpha, alpha in (0, 1]; the result is validated.
SpacePtr power_metric(const FiniteMetricSpace& space, double alpha);

/// min over pairs of dist; zero iff the subsets intersect.
double set_distance(const PointSubset& a, const PointSubset& b);

/// max pairwise distance; zero for singletons.
double diameter(const PointSubset& m);

/// Detects the discrete-apex shape: returns the apex index and its common
/// distance l when all other points are pairwise at distance 1 and the apex
/// row is constant.
struct DiscreteApexShape {
  int apex_index;
  double l;
};
std::optional<DiscreteApexShape> detect_discrete_apex(
    const FiniteMetricSpace& space);

}  // namespace lipext

#endif
