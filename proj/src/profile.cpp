#include "nscompat/profile.hpp"

#include "nscompat/errors.hpp"

namespace nscompat {

namespace {

void require_same_size(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) throw ConfigError("profiles live on grids of different size");
}

Eigen::VectorXd sample(const ChebGrid& grid, const Polynomial& p) {
  Eigen::VectorXd v(grid.n());
  for (int k = 0; k < grid.n(); ++k) v(k) = p(grid.points()(k));
  return v;
}

}  // namespace

Profile::Profile(Eigen::VectorXd values, std::optional<Polynomial> poly)
    : values_(std::move(values)), poly_(std::move(poly)) {}

Profile Profile::zero(const ChebGrid& grid) {
  return Profile(Eigen::VectorXd::Zero(grid.n()), Polynomial{});
}

Profile Profile::from_poly(const ChebGrid& grid, Polynomial poly) {
  Eigen::VectorXd v = sample(grid, poly);
  return Profile(std::move(v), std::move(poly));
}

bool Profile::is_zero() const {
  if (poly_) return poly_->is_zero();
  return values_.size() == 0 || (values_.array() == 0.0).all();
}

double Profile::max_abs() const { return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }

double Profile::at(const ChebGrid& grid, double y) const {
  if (poly_) return (*poly_)(y);
  return grid.interpolate(values_, y);
}

Profile Profile::derivative(const ChebGrid& grid) const {
  if (poly_) return from_poly(grid, poly_->derivative());
  return Profile(grid.d1() * values_);
}

Profile Profile::second_derivative(const ChebGrid& grid) const {
  if (poly_) return from_poly(grid, poly_->derivative().derivative());
  return Profile(grid.d2() * values_);
}

Profile Profile::resampled(const ChebGrid& from, const ChebGrid& to) const {
  if (poly_) return from_poly(to, *poly_);
  if (from.n() == to.n()) return *this;
  return Profile(from.interpolation_matrix(to.points()) * values_);
}

Profile& Profile::operator+=(const Profile& other) {
  require_same_size(*this, other);
  values_ += other.values_;
  if (poly_ && other.poly_)
    *poly_ += *other.poly_;
  else
    poly_.reset();
  return *this;
}

Profile& Profile::operator-=(const Profile& other) {
  require_same_size(*this, other);
  values_ -= other.values_;
  if (poly_ && other.poly_)
    *poly_ -= *other.poly_;
  else
    poly_.reset();
  return *this;
}

Profile& Profile::operator*=(double s) {
  values_ *= s;
  if (poly_) *poly_ *= s;
  return *this;
}

Profile operator*(const Profile& a, const Profile& b) {
  require_same_size(a, b);
  Eigen::VectorXd v = a.values_.cwiseProduct(b.values_);
  if (a.poly_ && b.poly_) return Profile(std::move(v), *a.poly_ * *b.poly_);
  return Profile(std::move(v));
}

}  // namespace nscompat
