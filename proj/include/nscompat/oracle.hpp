#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nscompat/compat.hpp"
#include "nscompat/wave_field.hpp"

namespace nscompat::oracle {

/// The analytic incompatible example
///   u1 = 0,  u2 = cos θ (y²-1)²,  u3 = -4y sin θ (y²-1)/β,
/// carried as exact polynomials. Throws DomainError for beta <= 0.
WaveField example_field(const FlowParams& params, const GridPtr& grid);

/// Closed-form curl of example_field.
WaveField example_vorticity(const FlowParams& params, const GridPtr& grid);

/// Closed-form A_{k,j}, B_{k,j} of the Poisson source for ∂u/∂t.
WaveField example_forcing(const FlowParams& params, const GridPtr& grid);

/// Closed-form ∂u/∂t at t = 0.
///
/// b_{1,2}, a_{2,1}, a_{2,2} are the known closed forms. The u3 profiles are
/// solved analytically from B_{3,1}, B_{3,2} (b_{3,1}, b_{3,2} nonzero,
/// a_{3,1} = a_{3,2} = 0); compare example_dudt_as_listed.
WaveField example_dudt(const FlowParams& params, const GridPtr& grid);

/// ∂u/∂t with the u3 block in its commonly quoted form (a_{3,j} copies of a_{2,j}, b_{3,j} = 0).
/// Kept to document that this u3 block does not solve its own Poisson problem.
WaveField example_dudt_as_listed(const FlowParams& params, const GridPtr& grid);

/// Closed-form Fourier coefficients da_0, da_1, da_2 (cosine) of div ∂u/∂t; sines vanish.
ScalarWave example_div_coeffs(const FlowParams& params, const GridPtr& grid);

/// Top-wall (y = +1) residual coefficients; index [direction][j], j = 0..2.
struct CcCoefficients {
  std::array<std::array<CoeffPair, 3>, 2> top;
  double c3 = 0.0;
};
CcCoefficients example_cc_coeffs(const FlowParams& params);

/// Pipeline-vs-closed-form discrepancy of one block of the example.
struct Discrepancy {
  std::string block;
  double max_abs = 0.0;   // largest absolute difference over all profiles and grid points
  double reference = 0.0; // largest magnitude of the closed form
  double relative() const { return reference > 0.0 ? max_abs / reference : max_abs; }
};

/// Runs the pipeline on example_field and compares vorticity, forcing, ∂u/∂t, divergence
/// defect and the top-wall residual coefficients against their closed forms.
std::vector<Discrepancy> compare_pipeline(const FlowParams& params, const GridPtr& grid);

/// Analytic solution of  a'' - m a = rhs,  a(±1) = 0  for polynomial rhs and m > 0.
std::function<double(double)> helmholtz_dirichlet_closed_form(const Polynomial& rhs, double m);

}  // namespace nscompat::oracle
