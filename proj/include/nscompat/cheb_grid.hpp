#pragma once

#include <memory>

#include <Eigen/Dense>

namespace nscompat {

/// Chebyshev–Gauss–Lobatto collocation grid on [-1, 1].
///
/// Orientation is descending: points()[0] == +1 (upper wall) and
/// points()[n-1] == -1 (lower wall). Every profile in the library is stored
/// in this order.
class ChebGrid {
 public:
  explicit ChebGrid(int n);

  int n() const { return n_; }
  const Eigen::VectorXd& points() const { return points_; }
  const Eigen::MatrixXd& d1() const { return d1_; }
  const Eigen::MatrixXd& d2() const { return d2_; }
  /// Clenshaw–Curtis quadrature weights: integral over [-1,1] ≈ weights().dot(values).
  const Eigen::VectorXd& weights() const { return quad_; }

  static constexpr int kTop = 0;
  int bottom() const { return n_ - 1; }

  /// Barycentric interpolation of grid samples at an arbitrary y in [-1, 1].
  double interpolate(const Eigen::VectorXd& values, double y) const;
  /// Matrix mapping samples on this grid to samples at `targets`.
  Eigen::MatrixXd interpolation_matrix(const Eigen::VectorXd& targets) const;

  double integrate(const Eigen::VectorXd& values) const { return quad_.dot(values); }

 private:
  int n_;
  Eigen::VectorXd points_;
  Eigen::VectorXd bary_;
  Eigen::MatrixXd d1_;
  Eigen::MatrixXd d2_;
  Eigen::VectorXd quad_;
};

using GridPtr = std::shared_ptr<const ChebGrid>;

inline constexpr int kMinGridPoints = 8;
inline constexpr int kDefaultGridPoints = 64;

/// Throws ConfigError for n < kMinGridPoints. Grids are cached per n.
GridPtr build_grid(int n = kDefaultGridPoints);

}  // namespace nscompat
