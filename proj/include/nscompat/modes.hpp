#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nscompat/wave_field.hpp"

namespace nscompat {

/// One Orr–Sommerfeld eigenpair on the Poiseuille base U = 1 - y².
///
/// The disturbance is  v(y) exp(iθ + λt);  growth rate is Re(λ). v̂ is sampled
/// on `grid` (descending), scaled so max|v̂| = 1 with v̂ real at its peak.
struct ModeResult {
  std::complex<double> eigenvalue;
  Eigen::VectorXcd vhat;
  GridPtr grid;
  FlowParams params;

  double growth_rate() const { return eigenvalue.real(); }
  /// Complex phase speed c with λ = -iαc.
  std::complex<double> phase_speed() const { return std::complex<double>(0.0, 1.0) * eigenvalue / params.alpha; }
};

inline constexpr int kMinOrrSommerfeldPoints = 24;
/// Modes whose normalised eigenfunction moves more than this under n → n+8 are discarded.
inline constexpr double kSpuriousModeTol = 1e-4;

/// Poiseuille profile u1 = 1 - y² as harmonic 0.
WaveField poiseuille_base(const FlowParams& params, const GridPtr& grid);

/// All eigenvalues of the clamped generalised problem at resolution n, unfiltered,
/// sorted by decreasing growth rate.
std::vector<ModeResult> orr_sommerfeld_spectrum(const FlowParams& params, int n);

/// Physical modes (spurious-filtered against an n+8 solve), sorted by decreasing growth rate.
/// Throws ConfigError for n < kMinOrrSommerfeldPoints, NumericalError on solver failure.
std::vector<ModeResult> solve_orr_sommerfeld(const FlowParams& params, int n = 40);

/// Real initial field  base + amplitude · Re[(u, v, w)(y) e^{iθ}]  with zero normal vorticity;
/// u and w follow from continuity. Sampled on `grid` by polynomial interpolation of v̂.
WaveField mode_to_field(const ModeResult& mode, double amplitude, bool include_base, const GridPtr& grid);

}  // namespace nscompat
