#pragma once

#include <string>
#include <vector>

#include "nscompat/wave_field.hpp"

namespace nscompat {

ScalarWave divergence(const WaveField& f);
WaveField gradient(const ScalarWave& s);
WaveField curl(const WaveField& f);
WaveField laplacian(const WaveField& f);

/// Right-hand side of the vorticity transport equation at t = 0:
///   -u_j ∂ω_i/∂x_j + ω_j ∂u_i/∂x_j + (1/Re) Δω_i.
/// Quadratic terms are formed in coefficient space, so the harmonic content is exact.
WaveField vorticity_rhs(const WaveField& u0, double reynolds);

/// Source of the Poisson problems for ∂u/∂t at t = 0: f = -curl(vorticity_rhs).
WaveField forcing(const WaveField& u0, double reynolds);

/// max|div f| / max|individual divergence terms|; 0 for a zero field.
double relative_divergence(const WaveField& f);

inline constexpr double kDivergenceWarnTol = 1e-8;
inline constexpr double kDivergenceErrorTol = 1e-4;
inline constexpr double kNoSlipTol = 1e-10;

/// Admissibility of an initial field: no-slip at both walls, divergence-free.
struct Admissibility {
  std::vector<std::string> violations;  // hard errors
  std::vector<std::string> warnings;
  double relative_divergence = 0.0;
  double max_wall_velocity = 0.0;
  bool ok() const { return violations.empty(); }
};

/// `div_error_tol` bounds the relative divergence before it counts as a violation.
Admissibility check_admissible(const WaveField& u0, double div_error_tol = kDivergenceErrorTol);

}  // namespace nscompat
