#include "nscompat/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nscompat/errors.hpp"
#include "nscompat/fieldops.hpp"

namespace nscompat {

namespace {

constexpr double kSingularK2 = 1e-14;

}  // namespace

HelmholtzSolver::HelmholtzSolver(GridPtr grid, double k2, BcKind kind)
    : grid_(std::move(grid)), k2_(k2), kind_(kind), singular_(kind == BcKind::Neumann && k2 < kSingularK2) {
  if (k2 < 0.0) throw ConfigError("Helmholtz parameter k² must be non-negative");
  const int n = grid_->n();
  Eigen::MatrixXd op = grid_->d2() - k2 * Eigen::MatrixXd::Identity(n, n);
  const int top = ChebGrid::kTop;
  const int bot = grid_->bottom();
  if (kind == BcKind::Dirichlet) {
    op.row(top).setZero();
    op(top, top) = 1.0;
    op.row(bot).setZero();
    op(bot, bot) = 1.0;
  } else {
    op.row(top) = grid_->d1().row(top);
    op.row(bot) = grid_->d1().row(bot);
  }
  if (singular_) {
    Eigen::MatrixXd stacked(n + 1, n);
    stacked.topRows(n) = op;
    stacked.row(n) = grid_->weights().transpose();
    qr_.compute(stacked);
  } else {
    lu_.compute(op);
    const double rcond = lu_.rcond();
    if (!(rcond > 1e-15)) {
      std::ostringstream os;
      os << "Helmholtz operator is singular (k2=" << k2 << ", rcond=" << rcond << ")";
      throw NumericalError(os.str());
    }
  }
}

double HelmholtzSolver::solvability_residual(const Profile& rhs, std::array<double, 2> bc) const {
  if (!singular_) return 0.0;
  return grid_->integrate(rhs.values()) - (bc[1] - bc[0]);
}

Profile HelmholtzSolver::solve(const Profile& rhs, std::array<double, 2> bc, double reference_scale) const {
  const int n = grid_->n();
  if (rhs.size() != n) throw ConfigError("right-hand side does not match grid size");
  Eigen::VectorXd b = rhs.values();
  b(ChebGrid::kTop) = bc[1];
  b(grid_->bottom()) = bc[0];
  if (!singular_) return Profile(lu_.solve(b));

  const double residual = solvability_residual(rhs, bc);
  const double scale =
      std::max(grid_->integrate(rhs.values().cwiseAbs()) + std::abs(bc[0]) + std::abs(bc[1]), reference_scale);
  if (std::abs(residual) > kNeumannSolvabilityTol * std::max(scale, 1e-300) && std::abs(residual) > 1e-300) {
    std::ostringstream os;
    os << "pure Neumann problem violates solvability: residual " << residual << " (scale " << scale << ")";
    throw SolvabilityError(os.str(), residual);
  }
  Eigen::VectorXd stacked(n + 1);
  stacked.head(n) = b;
  stacked(n) = 0.0;
  return Profile(qr_.solve(stacked));
}

Profile solve_bvp(const BVPSpec& spec, const GridPtr& grid) {
  return HelmholtzSolver(grid, spec.helmholtz_k2, spec.bc_kind).solve(spec.rhs, spec.bc_values);
}

WaveField solve_dudt(const WaveField& u0_in, double reynolds, const GridPtr& grid) {
  const WaveField u0 = u0_in.grid().n() == grid->n() ? u0_in : u0_in.resampled(grid);
  const WaveField f = forcing(u0, reynolds);
  const int jmax = f.max_harmonic();
  WaveField out(u0.params(), grid, jmax);
  const double k2 = u0.params().k2();
  for (int j = 0; j <= jmax; ++j) {
    bool any = false;
    for (int k = 0; k < 3; ++k) any = any || !f[k].cos(j).is_zero() || !f[k].sin(j).is_zero();
    if (!any) continue;
    const HelmholtzSolver solver(grid, static_cast<double>(j) * j * k2, BcKind::Dirichlet);
    for (int k = 0; k < 3; ++k) {
      if (!f[k].cos(j).is_zero()) out[k].set_cos(j, solver.solve(f[k].cos(j), {0.0, 0.0}));
      if (j > 0 && !f[k].sin(j).is_zero()) out[k].set_sin(j, solver.solve(f[k].sin(j), {0.0, 0.0}));
    }
  }
  return out;
}

ScalarWave pressure_source(const WaveField& u0) {
  // grad[j][i] = ∂u_j/∂x_i
  const std::array<WaveField, 3> grad{gradient(u0[0]), gradient(u0[1]), gradient(u0[2])};
  ScalarWave src(u0.params(), u0.grid_ptr(), 0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const ScalarWave& a = grad[j][i];
      const ScalarWave& b = grad[i][j];
      if (a.is_zero() || b.is_zero()) continue;
      ScalarWave term = harmonic_product(a, b);
      src -= (i == j) ? term : term * 2.0;
    }
  }
  return src;
}

PressureSolution solve_pressure(const WaveField& u0_in, double reynolds, const GridPtr& grid) {
  const WaveField u0 = u0_in.grid().n() == grid->n() ? u0_in : u0_in.resampled(grid);
  const ScalarWave src = pressure_source(u0);
  const ScalarWave lap_v = u0[1].laplacian() * (1.0 / reynolds);
  const int jmax = std::max(src.max_harmonic(), lap_v.max_harmonic());
  PressureSolution out{ScalarWave(u0.params(), grid, jmax), 0.0};
  const double k2 = u0.params().k2();
  // Solvability of the mean mode is judged against the size of the velocity-gradient products,
  // since the source itself may cancel to round-off.
  double grad_max = 0.0;
  for (int k = 0; k < 3; ++k) grad_max = std::max(grad_max, gradient(u0[k]).max_abs_coeff());
  const double data_scale = 2.0 * std::max({grad_max * grad_max, src.max_abs_coeff(), lap_v.max_abs_coeff()});
  for (int j = 0; j <= jmax; ++j) {
    const HelmholtzSolver solver(grid, static_cast<double>(j) * j * k2, BcKind::Neumann);
    const Profile& ac = lap_v.cos(j);
    out.pressure.set_cos(j, solver.solve(src.cos(j), {ac.bottom(), ac.top()}, data_scale));
    if (j == 0) {
      out.mean_mode_solvability = solver.solvability_residual(src.cos(0), {ac.bottom(), ac.top()});
    } else {
      const Profile& as = lap_v.sin(j);
      out.pressure.set_sin(j, solver.solve(src.sin(j), {as.bottom(), as.top()}));
    }
  }
  return out;
}

}  // namespace nscompat
