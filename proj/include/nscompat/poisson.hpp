#pragma once

#include <array>

#include <Eigen/Dense>

#include "nscompat/wave_field.hpp"

namespace nscompat {

enum class BcKind { Dirichlet, Neumann };

/// Two-point problem  a'' - k² a = rhs  on [-1, 1].
struct BVPSpec {
  double helmholtz_k2 = 0.0;
  Profile rhs;
  BcKind bc_kind = BcKind::Dirichlet;
  /// Boundary data at y = -1 and y = +1 (values or y-derivatives).
  std::array<double, 2> bc_values{0.0, 0.0};
};

/// Relative tolerance on the pure-Neumann compatibility  ∫rhs dy = a'(+1) - a'(-1).
inline constexpr double kNeumannSolvabilityTol = 1e-8;

/// Factorised collocation operator for one (k², BC kind); reusable across right-hand sides.
///
/// Boundary rows of D2 - k² I are replaced by Dirichlet or Neumann rows. The
/// singular pure-Neumann case (k² = 0) is gauge-fixed to zero mean.
class HelmholtzSolver {
 public:
  HelmholtzSolver(GridPtr grid, double k2, BcKind kind);

  /// Throws SolvabilityError when a pure-Neumann problem violates solvability, judged relative
  /// to the larger of the data's own size and `reference_scale`.
  Profile solve(const Profile& rhs, std::array<double, 2> bc_values, double reference_scale = 0.0) const;
  /// ∫rhs dy - (g(+1) - g(-1)) for pure-Neumann problems, 0 otherwise.
  double solvability_residual(const Profile& rhs, std::array<double, 2> bc_values) const;
  bool singular() const { return singular_; }

 private:
  GridPtr grid_;
  double k2_;
  BcKind kind_;
  bool singular_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

Profile solve_bvp(const BVPSpec& spec, const GridPtr& grid);

/// ∂u/∂t at t = 0 from the three vector-Poisson problems Δ(∂u/∂t) = forcing(u0)
/// with homogeneous Dirichlet data at both walls, one BVP per component and harmonic.
/// u0 is resampled onto `grid` when needed.
WaveField solve_dudt(const WaveField& u0, double reynolds, const GridPtr& grid);

struct PressureSolution {
  ScalarWave pressure;
  /// Solvability residual of the j = 0 Neumann problem (should be round-off).
  double mean_mode_solvability = 0.0;
};

/// Initial pressure from Δp = -(∂u_j/∂x_i)(∂u_i/∂x_j) with the wall-normal momentum
/// balance ∂p/∂y = (1/Re) Δu_2 at y = ±1. The j = 0 harmonic has zero mean.
PressureSolution solve_pressure(const WaveField& u0, double reynolds, const GridPtr& grid);

/// Right-hand side of the pressure Poisson equation, -(∂u_j/∂x_i)(∂u_i/∂x_j).
ScalarWave pressure_source(const WaveField& u0);

}  // namespace nscompat
