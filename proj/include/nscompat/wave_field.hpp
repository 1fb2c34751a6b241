#pragma once

#include <array>
#include <vector>

#include "nscompat/cheb_grid.hpp"
#include "nscompat/profile.hpp"

namespace nscompat {

/// Wavenumbers and Reynolds number of the periodic channel problem.
/// Box lengths are Lx = 2π/alpha and Lz = 2π/beta.
struct FlowParams {
  double alpha = 1.0;
  double beta = 1.0;
  double reynolds = 80.0;

  /// Throws DomainError unless alpha, beta and reynolds are all positive and finite.
  void validate() const;
  /// Squared magnitude of the base wavevector, alpha² + beta².
  double k2() const { return alpha * alpha + beta * beta; }
  friend bool operator==(const FlowParams&, const FlowParams&) = default;
};

/// Cosine and sine profiles of one harmonic j of the phase θ = αx + βz.
struct Harmonic {
  Profile cos;
  Profile sin;
};

/// Scalar field  Σ_j a_j(y) cos(jθ) + b_j(y) sin(jθ),  j = 0..J.
///
/// Harmonics are stored densely by index; the sine profile of j = 0 is
/// always zero.
class ScalarWave {
 public:
  ScalarWave(FlowParams params, GridPtr grid, int max_harmonic = 0);

  const FlowParams& params() const { return params_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const ChebGrid& grid() const { return *grid_; }

  int max_harmonic() const { return static_cast<int>(harmonics_.size()) - 1; }
  /// Zero profiles are returned for j beyond max_harmonic().
  const Profile& cos(int j) const;
  const Profile& sin(int j) const;
  void set_cos(int j, Profile p);
  /// Throws ConfigError for j = 0 with a nonzero profile.
  void set_sin(int j, Profile p);
  void add_cos(int j, const Profile& p);
  void add_sin(int j, const Profile& p);

  bool is_zero() const;
  double max_abs_coeff() const;
  double eval(double x, double y, double z) const;

  /// Drops trailing harmonics whose profiles are exactly zero.
  ScalarWave trimmed() const;
  ScalarWave resampled(const GridPtr& target) const;

  ScalarWave ddx() const;
  ScalarWave ddy() const;
  ScalarWave ddz() const;
  ScalarWave laplacian() const;

  ScalarWave& operator+=(const ScalarWave& other);
  ScalarWave& operator-=(const ScalarWave& other);
  ScalarWave& operator*=(double s);
  friend ScalarWave operator+(ScalarWave a, const ScalarWave& b) { return a += b; }
  friend ScalarWave operator-(ScalarWave a, const ScalarWave& b) { return a -= b; }
  friend ScalarWave operator*(ScalarWave a, double s) { return a *= s; }
  friend ScalarWave operator*(double s, ScalarWave a) { return a *= s; }

 private:
  void ensure(int j);
  ScalarWave tangential_derivative(double wavenumber) const;

  FlowParams params_;
  GridPtr grid_;
  Profile zero_;
  std::vector<Harmonic> harmonics_;
};

/// Three-component velocity-like field; every component is a ScalarWave on the same grid.
class WaveField {
 public:
  WaveField(FlowParams params, GridPtr grid, int max_harmonic = 0);
  WaveField(ScalarWave u1, ScalarWave u2, ScalarWave u3);

  const FlowParams& params() const { return comp_[0].params(); }
  const GridPtr& grid_ptr() const { return comp_[0].grid_ptr(); }
  const ChebGrid& grid() const { return comp_[0].grid(); }

  ScalarWave& operator[](int k) { return comp_.at(static_cast<std::size_t>(k)); }
  const ScalarWave& operator[](int k) const { return comp_.at(static_cast<std::size_t>(k)); }
  int max_harmonic() const;
  bool is_zero() const;
  double max_abs_coeff() const;

  WaveField resampled(const GridPtr& target) const;

  WaveField& operator+=(const WaveField& other);
  WaveField& operator-=(const WaveField& other);
  WaveField& operator*=(double s);
  friend WaveField operator+(WaveField a, const WaveField& b) { return a += b; }
  friend WaveField operator-(WaveField a, const WaveField& b) { return a -= b; }
  friend WaveField operator*(WaveField a, double s) { return a *= s; }
  friend WaveField operator*(double s, WaveField a) { return a *= s; }

 private:
  std::array<ScalarWave, 3> comp_;
};

/// Exact product of two harmonic expansions (product-to-sum identities).
/// Output harmonics reach J1 + J2. Throws ConfigError on mismatched params or grid.
ScalarWave harmonic_product(const ScalarWave& f, const ScalarWave& g);

/// Physical value of all three components at (x, y, z). Throws DomainError for |y| > 1.
std::array<double, 3> eval_field(const WaveField& f, double x, double y, double z);

}  // namespace nscompat
