#pragma once

#include <array>
#include <string>
#include <vector>

#include "nscompat/poisson.hpp"
#include "nscompat/wave_field.hpp"

namespace nscompat {

enum class Wall { Bottom = 0, Top = 1 };  // y = -1, y = +1
enum class Direction { X = 0, Z = 1 };

struct CoeffPair {
  double cos = 0.0;
  double sin = 0.0;
};

/// Wall values of  (1/Re) Δu·t - ∂p/∂x·t  per wall, tangential direction and harmonic.
///
/// The j = 0 part is taken relative to the uniform mean pressure gradient that
/// drives the channel, i.e. the mean of the two wall values is removed and
/// reported in `mean_pressure_gradient`.
struct TangentialResidual {
  // coeffs[wall][direction][j]
  std::array<std::array<std::vector<CoeffPair>, 2>, 2> coeffs;
  std::array<double, 2> mean_pressure_gradient{0.0, 0.0};
  /// Largest magnitude among the individual viscous and pressure terms.
  double scale = 0.0;

  int max_harmonic() const;
  CoeffPair at(Wall w, Direction d, int j) const;
  double max_abs() const;
  double relative() const;
};

struct DefectResult {
  ScalarWave field;
  double max_abs = 0.0;  // over the y grid and a uniform phase sampling
  double l2 = 0.0;       // RMS over one periodic cell (per unit area)
  double scale = 0.0;    // largest of the three divergence terms
  double relative = 0.0;
};

enum class Verdict { Compatible, Incompatible };

inline constexpr double kDefaultVerdictTol = 1e-7;

struct CompatReport {
  FlowParams params;
  int grid_n = 0;
  double tolerance = kDefaultVerdictTol;
  WaveField dudt;
  DefectResult defect;
  PressureSolution pressure;
  TangentialResidual residual;
  bool defect_ok = true;
  bool residual_ok = true;
  Verdict verdict = Verdict::Compatible;
  std::vector<std::string> warnings;
};

TangentialResidual tangential_residual(const WaveField& u0, const ScalarWave& p0, double reynolds);

DefectResult divergence_defect(const WaveField& dudt, const GridPtr& grid);

/// Full compatibility check of an admissible initial field.
///
/// Throws ValidationError when u0 violates no-slip or continuity, ConfigError
/// when `params` differ from the field's own parameters.
CompatReport check(const WaveField& u0, const FlowParams& params, const GridPtr& grid,
                   double tol = kDefaultVerdictTol);

}  // namespace nscompat
