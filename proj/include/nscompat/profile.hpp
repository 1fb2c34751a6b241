#pragma once

#include <optional>

#include <Eigen/Dense>

#include "nscompat/cheb_grid.hpp"
#include "nscompat/polynomial.hpp"

namespace nscompat {

/// A scalar function of the wall-normal coordinate.
///
/// Always carries samples at the collocation points of some ChebGrid
/// (descending orientation). When the function is known to be a polynomial
/// the exact coefficients travel along; arithmetic keeps them exact while
/// both operands have one, and drops them otherwise.
class Profile {
 public:
  Profile() = default;
  explicit Profile(Eigen::VectorXd values, std::optional<Polynomial> poly = std::nullopt);

  static Profile zero(const ChebGrid& grid);
  static Profile from_poly(const ChebGrid& grid, Polynomial poly);
  template <class Fn>
  static Profile from_function(const ChebGrid& grid, Fn&& fn) {
    Eigen::VectorXd v(grid.n());
    for (int k = 0; k < grid.n(); ++k) v(k) = fn(grid.points()(k));
    return Profile(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  const Eigen::VectorXd& values() const { return values_; }
  const std::optional<Polynomial>& poly() const { return poly_; }

  bool is_zero() const;
  double max_abs() const;
  double top() const { return values_(0); }
  double bottom() const { return values_(values_.size() - 1); }

  /// Value at arbitrary y; exact polynomial when available, barycentric otherwise.
  double at(const ChebGrid& grid, double y) const;

  Profile derivative(const ChebGrid& grid) const;
  Profile second_derivative(const ChebGrid& grid) const;
  /// Samples on another grid; polynomials are re-evaluated exactly.
  Profile resampled(const ChebGrid& from, const ChebGrid& to) const;

  Profile& operator+=(const Profile& other);
  Profile& operator-=(const Profile& other);
  Profile& operator*=(double s);
  Profile operator-() const { return Profile(*this) *= -1.0; }

  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator-(Profile a, const Profile& b) { return a -= b; }
  friend Profile operator*(Profile a, double s) { return a *= s; }
  friend Profile operator*(double s, Profile a) { return a *= s; }
  /// Pointwise product.
  friend Profile operator*(const Profile& a, const Profile& b);

 private:
  Eigen::VectorXd values_;
  std::optional<Polynomial> poly_;
};

}  // namespace nscompat
