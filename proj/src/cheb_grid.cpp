#include "nscompat/cheb_grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "nscompat/errors.hpp"

namespace nscompat {

namespace {

using std::numbers::pi;

Eigen::VectorXd clenshaw_curtis(int n) {
  const int N = n - 1;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(N - 1);
  auto theta = [N](int i) { return pi * i / N; };
  if (N % 2 == 0) {
    w(0) = w(N) = 1.0 / (N * N - 1.0);
    for (int k = 1; k < N / 2; ++k)
      for (int i = 1; i < N; ++i) v(i - 1) -= 2.0 * std::cos(2.0 * k * theta(i)) / (4.0 * k * k - 1.0);
    for (int i = 1; i < N; ++i) v(i - 1) -= std::cos(N * theta(i)) / (N * N - 1.0);
  } else {
    w(0) = w(N) = 1.0 / (static_cast<double>(N) * N);
    for (int k = 1; k <= (N - 1) / 2; ++k)
      for (int i = 1; i < N; ++i) v(i - 1) -= 2.0 * std::cos(2.0 * k * theta(i)) / (4.0 * k * k - 1.0);
  }
  for (int i = 1; i < N; ++i) w(i) = 2.0 * v(i - 1) / N;
  return w;
}

}  // namespace

ChebGrid::ChebGrid(int n) : n_(n) {
  if (n < kMinGridPoints)
    throw ConfigError("Chebyshev grid needs at least " + std::to_string(kMinGridPoints) +
                      " points, got " + std::to_string(n));
  const int N = n - 1;
  points_.resize(n);
  bary_.resize(n);
  // sin form keeps the nodes exactly antisymmetric
  for (int k = 0; k < n; ++k) {
    points_(k) = std::sin(pi * (N - 2.0 * k) / (2.0 * N));
    bary_(k) = (k % 2 == 0 ? 1.0 : -1.0) * ((k == 0 || k == N) ? 0.5 : 1.0);
  }
  points_(0) = 1.0;
  points_(N) = -1.0;

  d1_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // x_i - x_j via the trig identity avoids cancellation near the walls
      const double diff = -2.0 * std::sin(pi * (i + j) / (2.0 * N)) * std::sin(pi * (i - j) / (2.0 * N));
      const double ci = (i == 0 || i == N) ? 2.0 : 1.0;
      const double cj = (j == 0 || j == N) ? 2.0 : 1.0;
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      d1_(i, j) = sign * ci / (cj * diff);
      row += d1_(i, j);
    }
    d1_(i, i) = -row;
  }
  d2_ = d1_ * d1_;
  quad_ = clenshaw_curtis(n);
}

double ChebGrid::interpolate(const Eigen::VectorXd& values, double y) const {
  double num = 0.0, den = 0.0;
  for (int k = 0; k < n_; ++k) {
    const double dy = y - points_(k);
    if (dy == 0.0) return values(k);
    const double t = bary_(k) / dy;
    num += t * values(k);
    den += t;
  }
  return num / den;
}

Eigen::MatrixXd ChebGrid::interpolation_matrix(const Eigen::VectorXd& targets) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(targets.size(), n_);
  for (Eigen::Index r = 0; r < targets.size(); ++r) {
    const double y = targets(r);
    double den = 0.0;
    int exact = -1;
    for (int k = 0; k < n_; ++k) {
      const double dy = y - points_(k);
      if (dy == 0.0) {
        exact = k;
        break;
      }
      m(r, k) = bary_(k) / dy;
      den += m(r, k);
    }
    if (exact >= 0) {
      m.row(r).setZero();
      m(r, exact) = 1.0;
    } else {
      m.row(r) /= den;
    }
  }
  return m;
}

GridPtr build_grid(int n) {
  static std::mutex mutex;
  static std::map<int, GridPtr> cache;
  if (n < kMinGridPoints)
    throw ConfigError("Chebyshev grid needs at least " + std::to_string(kMinGridPoints) +
                      " points, got " + std::to_string(n));
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const ChebGrid>(n);
  return slot;
}

}  // namespace nscompat
