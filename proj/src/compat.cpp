#include "nscompat/compat.hpp"

#include <cmath>
#include <numbers>

#include "nscompat/errors.hpp"
#include "nscompat/fieldops.hpp"

namespace nscompat {

int TangentialResidual::max_harmonic() const { return static_cast<int>(coeffs[0][0].size()) - 1; }

CoeffPair TangentialResidual::at(Wall w, Direction d, int j) const {
  const auto& v = coeffs[static_cast<int>(w)][static_cast<int>(d)];
  if (j < 0 || j >= static_cast<int>(v.size())) return {};
  return v[static_cast<std::size_t>(j)];
}

double TangentialResidual::max_abs() const {
  double m = 0.0;
  for (const auto& wall : coeffs)
    for (const auto& dir : wall)
      for (const auto& c : dir) m = std::max({m, std::abs(c.cos), std::abs(c.sin)});
  return m;
}

double TangentialResidual::relative() const { return scale > 0.0 ? max_abs() / scale : 0.0; }

TangentialResidual tangential_residual(const WaveField& u0, const ScalarWave& p0, double reynolds) {
  const double inv_re = 1.0 / reynolds;
  const std::array<ScalarWave, 2> viscous{u0[0].laplacian() * inv_re, u0[2].laplacian() * inv_re};
  const std::array<ScalarWave, 2> pgrad{p0.ddx(), p0.ddz()};
  const int jmax = std::max({viscous[0].max_harmonic(), viscous[1].max_harmonic(), p0.max_harmonic()});

  TangentialResidual out;
  for (int d = 0; d < 2; ++d) {
    for (int w = 0; w < 2; ++w) out.coeffs[w][d].resize(static_cast<std::size_t>(jmax) + 1);
    for (int j = 0; j <= jmax; ++j) {
      for (int w = 0; w < 2; ++w) {
        auto wall_value = [w](const Profile& p) { return w == 1 ? p.top() : p.bottom(); };
        const double vc = wall_value(viscous[d].cos(j));
        const double vs = wall_value(viscous[d].sin(j));
        const double pc = wall_value(pgrad[d].cos(j));
        const double ps = wall_value(pgrad[d].sin(j));
        out.scale = std::max({out.scale, std::abs(vc), std::abs(vs), std::abs(pc), std::abs(ps)});
        out.coeffs[w][d][static_cast<std::size_t>(j)] = {vc - pc, vs - ps};
      }
    }
    // uniform driving pressure gradient absorbs the wall-averaged j = 0 part
    const double g = 0.5 * (out.coeffs[0][d][0].cos + out.coeffs[1][d][0].cos);
    out.mean_pressure_gradient[d] = g;
    out.coeffs[0][d][0].cos -= g;
    out.coeffs[1][d][0].cos -= g;
  }
  return out;
}

DefectResult divergence_defect(const WaveField& dudt_in, const GridPtr& grid) {
  const WaveField dudt = dudt_in.grid().n() == grid->n() ? dudt_in : dudt_in.resampled(grid);
  const ScalarWave tx = dudt[0].ddx();
  const ScalarWave ty = dudt[1].ddy();
  const ScalarWave tz = dudt[2].ddz();
  DefectResult out{tx + ty + tz, 0.0, 0.0, 0.0, 0.0};
  out.scale = std::max({tx.max_abs_coeff(), ty.max_abs_coeff(), tz.max_abs_coeff()});
  out.relative = out.scale > 0.0 ? out.field.max_abs_coeff() / out.scale : 0.0;

  const ScalarWave& f = out.field;
  const int jmax = f.max_harmonic();
  const int n = grid->n();
  const int nphase = 16 * (jmax + 1);
  Eigen::VectorXd mean_square = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < n; ++k) {
    double ms = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      const double a = f.cos(j).values()(k);
      const double b = f.sin(j).values()(k);
      ms += j == 0 ? a * a : 0.5 * (a * a + b * b);
    }
    mean_square(k) = ms;
    for (int s = 0; s < nphase; ++s) {
      const double theta = 2.0 * std::numbers::pi * s / nphase;
      double v = 0.0;
      for (int j = 0; j <= jmax; ++j)
        v += f.cos(j).values()(k) * std::cos(j * theta) + f.sin(j).values()(k) * std::sin(j * theta);
      out.max_abs = std::max(out.max_abs, std::abs(v));
    }
  }
  out.l2 = std::sqrt(std::max(0.0, grid->integrate(mean_square)));
  return out;
}

CompatReport check(const WaveField& u0_in, const FlowParams& params, const GridPtr& grid, double tol) {
  params.validate();
  if (!(u0_in.params() == params)) throw ConfigError("field parameters differ from the requested flow parameters");
  if (!(tol > 0.0)) throw ConfigError("verdict tolerance must be positive");
  const WaveField u0 = u0_in.grid().n() == grid->n() ? u0_in : u0_in.resampled(grid);

  const Admissibility adm = check_admissible(u0);
  if (!adm.ok()) throw ValidationError("initial field is not admissible", adm.violations);

  WaveField dudt = solve_dudt(u0, params.reynolds, grid);
  DefectResult defect = divergence_defect(dudt, grid);
  PressureSolution pressure = solve_pressure(u0, params.reynolds, grid);
  TangentialResidual residual = tangential_residual(u0, pressure.pressure, params.reynolds);

  CompatReport rep{params, grid->n(), tol, std::move(dudt), std::move(defect), std::move(pressure),
                   std::move(residual), true, true, Verdict::Compatible, adm.warnings};
  rep.defect_ok = rep.defect.relative <= tol;
  rep.residual_ok = rep.residual.relative() <= tol;
  rep.verdict = rep.defect_ok && rep.residual_ok ? Verdict::Compatible : Verdict::Incompatible;
  return rep;
}

}  // namespace nscompat
