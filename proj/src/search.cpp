#include "nscompat/search.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "nscompat/compat.hpp"
#include "nscompat/errors.hpp"
#include "nscompat/poisson.hpp"

namespace nscompat::search {

int AnsatzSpec::num_free() const {
  int n = 0;
  for (bool f : free) n += f ? 1 : 0;
  return n;
}

namespace {

const Polynomial kWall1{-1.0, 0.0, 1.0};             // y² - 1
const Polynomial kWall2{1.0, 0.0, -2.0, 0.0, 1.0};  // (y² - 1)²

std::array<Polynomial, kSlots> slot_polys(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs) {
  if (spec.degree < 0) throw ConfigError("ansatz degree must be non-negative");
  if (coeffs.size() != spec.num_unknowns()) {
    std::ostringstream os;
    os << "ansatz expects " << spec.num_unknowns() << " coefficients, got " << coeffs.size();
    throw ConfigError(os.str());
  }
  std::array<Polynomial, kSlots> out;
  int offset = 0;
  const int m = spec.coeffs_per_slot();
  for (int s = 0; s < kSlots; ++s) {
    if (spec.free[s]) {
      out[s] = Polynomial(std::vector<double>(coeffs.data() + offset, coeffs.data() + offset + m));
      offset += m;
    } else {
      out[s] = spec.fixed[s];
    }
  }
  return out;
}

}  // namespace

WaveField assemble(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs) {
  if (!(spec.params.beta > 0.0)) throw DomainError("continuity recovery of u3 divides by beta; beta must be positive");
  spec.params.validate();
  const auto c = slot_polys(spec, coeffs);
  const GridPtr grid = build_grid(spec.grid_n);
  const double a = spec.params.alpha;
  const double b = spec.params.beta;

  const Polynomial a1 = c[0] * kWall1;
  const Polynomial b1 = c[1] * kWall1;
  const Polynomial a2 = c[2] * kWall2;
  const Polynomial b2 = c[3] * kWall2;
  // continuity, harmonic 1:  cos: α b1 + a2' + β b3 = 0,  sin: -α a1 + b2' - β a3 = 0
  const Polynomial b3 = (b1 * a + a2.derivative()) * (-1.0 / b);
  const Polynomial a3 = (b2.derivative() - a1 * a) * (1.0 / b);

  WaveField u(spec.params, grid, 1);
  u[0].set_cos(1, Profile::from_poly(*grid, a1));
  u[0].set_sin(1, Profile::from_poly(*grid, b1));
  u[1].set_cos(1, Profile::from_poly(*grid, a2));
  u[1].set_sin(1, Profile::from_poly(*grid, b2));
  u[2].set_cos(1, Profile::from_poly(*grid, a3));
  u[2].set_sin(1, Profile::from_poly(*grid, b3));
  return u;
}

namespace {

struct Evaluation {
  Eigen::VectorXd residual;
  Measures measures;
  double scale = 0.0;  // largest divergence term, the normalisation of relative_defect
};

Evaluation evaluate(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs) {
  const WaveField u0 = assemble(spec, coeffs);
  const GridPtr& grid = u0.grid_ptr();
  const double re = spec.params.reynolds;
  const WaveField dudt = solve_dudt(u0, re, grid);
  const DefectResult defect = divergence_defect(dudt, grid);

  const int interior = grid->n() - 2;
  const bool with_sin = spec.kind != ResidualKind::DefectCosine;
  int rows = (with_sin ? 4 : 2) * interior;
  std::optional<TangentialResidual> tang;
  if (spec.kind == ResidualKind::Full) {
    tang = tangential_residual(u0, solve_pressure(u0, re, grid).pressure, re);
    rows += 2 * 2 * 2 * (tang->max_harmonic() + 1);
  }
  Evaluation ev{Eigen::VectorXd(rows), {}};
  int r = 0;
  for (int j = 1; j <= 2; ++j) {
    ev.residual.segment(r, interior) = defect.field.cos(j).values().segment(1, interior);
    r += interior;
    if (!with_sin) continue;
    ev.residual.segment(r, interior) = defect.field.sin(j).values().segment(1, interior);
    r += interior;
  }
  if (tang) {
    for (const auto& wall : tang->coeffs)
      for (const auto& dir : wall)
        for (const auto& c : dir) {
          ev.residual(r++) = c.cos;
          ev.residual(r++) = c.sin;
        }
    ev.measures.relative_tangential = tang->relative();
  }
  ev.measures.relative_defect = defect.relative;
  ev.scale = defect.scale;
  const double total = u0.max_abs_coeff();
  ev.measures.wall_normal_fraction = total > 0.0 ? u0[1].max_abs_coeff() / total : 0.0;
  return ev;
}

bool reached(const AnsatzSpec& spec, const Evaluation& ev, double target) {
  const Measures& m = ev.measures;
  if (spec.kind == ResidualKind::DefectCosine) return ev.residual.lpNorm<Eigen::Infinity>() <= target * ev.scale;
  if (m.relative_defect > target) return false;
  return spec.kind == ResidualKind::Defect || m.relative_tangential <= target;
}

}  // namespace

Eigen::VectorXd residual(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs) {
  return evaluate(spec, coeffs).residual;
}

Measures measure(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs) {
  const WaveField u0 = assemble(spec, coeffs);
  const GridPtr& grid = u0.grid_ptr();
  const double re = spec.params.reynolds;
  Measures m;
  m.relative_defect = divergence_defect(solve_dudt(u0, re, grid), grid).relative;
  m.relative_tangential = tangential_residual(u0, solve_pressure(u0, re, grid).pressure, re).relative();
  const double total = u0.max_abs_coeff();
  m.wall_normal_fraction = total > 0.0 ? u0[1].max_abs_coeff() / total : 0.0;
  return m;
}

Eigen::VectorXd random_coeffs(const AnsatzSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::VectorXd c(spec.num_unknowns());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    c(i) = 2.0 * unit - 1.0;
  }
  return c;
}

SearchResult find_compatible(const AnsatzSpec& spec, const Eigen::VectorXd& initial, const SearchOptions& opt) {
  SearchResult res;
  res.coeffs = initial;
  Evaluation ev = evaluate(spec, res.coeffs);
  double cost = ev.residual.squaredNorm();
  double damping = 1e-3;
  const Eigen::Index nu = initial.size();
  const Eigen::Index nr = ev.residual.size();

  auto record = [&](int it) {
    res.trace.push_back({it, std::sqrt(cost), ev.measures.relative_defect, ev.measures.relative_tangential, damping});
  };
  record(0);

  for (int it = 1; it <= opt.max_iterations && !reached(spec, ev, opt.target); ++it) {
    Eigen::MatrixXd jac(nr, nu);
    for (Eigen::Index k = 0; k < nu; ++k) {
      Eigen::VectorXd xp = res.coeffs;
      const double h = opt.jacobian_step * std::max(1.0, std::abs(xp(k)));
      xp(k) += h;
      jac.col(k) = (evaluate(spec, xp).residual - ev.residual) / h;
    }
    const double jscale = std::max(jac.colwise().norm().maxCoeff(), 1e-300);

    bool accepted = false;
    for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
      // min |J δ + r|² + μ|δ|²  via the augmented least-squares system
      Eigen::MatrixXd aug(nr + nu, nu);
      aug.topRows(nr) = jac;
      aug.bottomRows(nu) = std::sqrt(damping) * jscale * Eigen::MatrixXd::Identity(nu, nu);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nr + nu);
      rhs.head(nr) = -ev.residual;
      const Eigen::VectorXd step = aug.colPivHouseholderQr().solve(rhs);
      const Eigen::VectorXd trial = res.coeffs + step;
      Evaluation tev = evaluate(spec, trial);
      const double tcost = tev.residual.squaredNorm();
      if (std::isfinite(tcost) && tcost < cost) {
        res.coeffs = trial;
        ev = std::move(tev);
        cost = tcost;
        damping = std::max(damping / 10.0, 1e-15);
        accepted = true;
      } else {
        damping *= 10.0;
      }
    }
    record(it);
    if (!accepted) break;
  }

  res.residual_norm = std::sqrt(cost);
  res.measures = ev.measures;
  res.converged = reached(spec, ev, opt.target);
  res.trivial = res.measures.wall_normal_fraction < opt.trivial_threshold;
  return res;
}

SearchResult find_compatible(const AnsatzSpec& spec, std::uint64_t seed, const SearchOptions& opt) {
  SearchResult r = find_compatible(spec, random_coeffs(spec, seed), opt);
  r.seed = seed;
  return r;
}

std::vector<SearchResult> find_with_restarts(const AnsatzSpec& spec, std::uint64_t seed, int max_restarts,
                                             const SearchOptions& opt) {
  std::vector<SearchResult> attempts;
  for (int i = 0; i <= max_restarts; ++i) {
    attempts.push_back(find_compatible(spec, seed + static_cast<std::uint64_t>(i), opt));
    if (attempts.back().success()) break;
  }
  return attempts;
}

std::array<Polynomial, kSlots> reference_example() {
  return {
      Polynomial{0.6324, 0.9134, 0.127, 0.9058, 0.8147},
      Polynomial{0.9649, 0.9575, 0.5469, 0.2785, 0.09754},
      Polynomial{1.599, 0.4689, 0.7068, -0.1986, -0.6011},
      Polynomial{1.537, 0.3238, 0.8618, 0.2864, 0.1063},
  };
}

Eigen::VectorXd flatten(const AnsatzSpec& spec, const std::array<Polynomial, kSlots>& polys) {
  const int m = spec.coeffs_per_slot();
  Eigen::VectorXd c(spec.num_unknowns());
  int o = 0;
  for (int s = 0; s < kSlots; ++s) {
    if (!spec.free[s]) continue;
    if (polys[s].degree() > spec.degree) throw ConfigError("polynomial degree exceeds ansatz degree");
    for (int i = 0; i < m; ++i) c(o++) = polys[s].coeff(i);
  }
  return c;
}

}  // namespace nscompat::search
