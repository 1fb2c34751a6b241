#include "nscompat/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "nscompat/errors.hpp"
#include "nscompat/fieldops.hpp"
#include "nscompat/poisson.hpp"

namespace nscompat::oracle {

namespace {

void require_beta(const FlowParams& p) {
  if (!(p.beta > 0.0)) throw DomainError("the example field divides by beta; beta must be positive");
  p.validate();
}

struct Consts {
  double a, b, re, k2, k;
  explicit Consts(const FlowParams& p)
      : a(p.alpha), b(p.beta), re(p.reynolds), k2(p.k2()), k(std::sqrt(p.k2())) {}
};

Polynomial b31_poly(const Consts& c) {
  const double s = 4.0 * c.k2 / (c.re * c.b);
  return Polynomial{0.0, s * (c.k2 + 12.0), 0.0, -s * c.k2};
}

Polynomial b32_poly(const Consts& c) {
  const double a2 = c.a * c.a;
  return Polynomial{2 * a2 + 1, 0.0, -2 * a2 + 6, 0.0, -2 * a2 - 15, 0.0, 2 * a2} * (4.0 / c.b);
}

}  // namespace

std::function<double(double)> helmholtz_dirichlet_closed_form(const Polynomial& rhs, double m) {
  if (!(m > 0.0)) throw DomainError("closed-form Helmholtz solve needs m > 0");
  // particular solution  -Σ_k rhs^(2k) / m^(k+1)
  Polynomial part;
  Polynomial d = rhs;
  double mk = m;
  while (!d.is_zero()) {
    part -= d * (1.0 / mk);
    d = d.derivative().derivative();
    mk *= m;
  }
  const double s = std::sqrt(m);
  const double top = part(1.0);
  const double bot = part(-1.0);
  const double c = -(top + bot) / (2.0 * std::cosh(s));
  const double e = -(top - bot) / (2.0 * std::sinh(s));
  return [part, c, e, s](double y) { return part(y) + c * std::cosh(s * y) + e * std::sinh(s * y); };
}

WaveField example_field(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  const double b = params.beta;
  WaveField u(params, grid, 1);
  u[1].set_cos(1, Profile::from_poly(*grid, Polynomial{1.0, 0.0, -2.0, 0.0, 1.0}));
  u[2].set_sin(1, Profile::from_poly(*grid, Polynomial{0.0, 4.0 / b, 0.0, -4.0 / b}));
  return u;
}

WaveField example_vorticity(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  const double a = params.alpha, b = params.beta;
  const ChebGrid& g = *grid;
  WaveField w(params, grid, 1);
  w[0].set_sin(1, Profile::from_function(g, [&](double y) {
    return (b * b * std::pow(y, 4) - 2 * b * b * y * y + b * b - 12 * y * y + 4) / b;
  }));
  w[1].set_cos(1, Profile::from_function(g, [&](double y) { return 4 * a * y * (y * y - 1) / b; }));
  w[2].set_sin(1, Profile::from_function(g, [&](double y) { return -a * std::pow(y * y - 1, 2); }));
  return w;
}

WaveField example_forcing(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  const Consts c(params);
  const double a = c.a, b = c.b, re = c.re;
  const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2;
  const ChebGrid& g = *grid;
  WaveField f(params, grid, 2);
  f[0].set_sin(2, Profile::from_function(g, [&](double y) {
    return -8 * a * std::pow(y * y - 1, 2) * (y * y + 1);
  }));
  f[1].set_cos(1, Profile::from_function(g, [&](double y) {
    return -1.0 / re *
           ((-a4 - 2 * a2 * b2 - b4) * std::pow(y, 4) +
            (2 * a4 + 4 * a2 * b2 + 24 * a2 + 2 * b4 + 24 * b2) * y * y - a4 - 2 * a2 * b2 - 8 * a2 - b4 -
            8 * b2 - 24);
  }));
  f[1].set_cos(2, Profile::from_function(g, [&](double y) { return 8 * y * (3 * y * y + 1) * (y - 1) * (y + 1); }));
  f[2].set_sin(1, Profile::from_function(g, [&](double y) {
    return 4 * y * (a2 + b2) * (-a2 * y * y + a2 - b2 * y * y + b2 + 12) / (re * b);
  }));
  f[2].set_sin(2, Profile::from_function(g, [&](double y) {
    return 4 *
           (2 * a2 * std::pow(y, 6) - 2 * a2 * std::pow(y, 4) - 2 * a2 * y * y + 2 * a2 - 15 * std::pow(y, 4) +
            6 * y * y + 1) /
           b;
  }));
  return f;
}

namespace {

WaveField closed_form_dudt_u12(const FlowParams& params, const GridPtr& grid) {
  const Consts c(params);
  const double a = c.a, b = c.b, re = c.re, k2 = c.k2, k = c.k;
  const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2, a6 = a4 * a2, b6 = b4 * b2;
  const ChebGrid& g = *grid;
  WaveField u(params, grid, 2);

  u[0].set_sin(2, Profile::from_function(g, [&](double y) {
    const double q = 16 * a4 + 32 * a2 * b2 + 84 * a2 + 16 * b4 + 84 * b2 + 45;
    const double den = 2 * (std::exp(-2 * k) + std::exp(2 * k)) * std::pow(k2, 4);
    return 2 * a * std::pow(y, 6) / k2 -
           a * (-4 * a6 - 12 * a4 * b2 + 2 * a4 - 12 * a2 * b4 + 4 * a2 * b2 + 6 * a2 - 4 * b6 + 2 * b4 + 6 * b2 - 45) /
               (2 * std::pow(k2, 4)) -
           a * std::pow(y, 4) * (2 * a2 + 2 * b2 - 15) / (k2 * k2) -
           a * y * y * (2 * a4 + 4 * a2 * b2 + 6 * a2 + 2 * b4 + 6 * b2 - 45) / std::pow(k2, 3) -
           a * std::exp(-2 * y * k) * q / den - a * std::exp(2 * y * k) * q / den;
  }));

  u[1].set_cos(1, Profile::from_function(g, [&](double y) {
    return 2 * y * y * (k2 + 6) / re - 8 * std::exp((y + 1) * k) / (re * (std::exp(2 * k) + 1)) -
           std::pow(y, 4) * k2 / re - (k2 + 4) / re - 8 * std::exp(-y * k) / (re * (std::exp(-k) + std::exp(k)));
  }));

  u[1].set_cos(2, Profile::from_function(g, [&](double y) {
    const double den = (std::exp(-2 * k) - std::exp(2 * k)) * std::pow(k2, 3);
    return 2 * std::pow(y, 3) * (2 * a2 + 2 * b2 - 15) / (k2 * k2) - 6 * std::pow(y, 5) / k2 +
           y * (2 * a4 + 4 * a2 * b2 + 6 * a2 + 2 * b4 + 6 * b2 - 45) / std::pow(k2, 3) +
           3 * std::exp(-2 * y * k) * (8 * a2 + 8 * b2 + 15) / den -
           3 * std::exp(2 * y * k) * (8 * a2 + 8 * b2 + 15) / den;
  }));
  return u;
}

}  // namespace

WaveField example_dudt(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  const Consts c(params);
  WaveField u = closed_form_dudt_u12(params, grid);
  u[2].set_sin(1, Profile::from_function(*grid, helmholtz_dirichlet_closed_form(b31_poly(c), c.k2)));
  u[2].set_sin(2, Profile::from_function(*grid, helmholtz_dirichlet_closed_form(b32_poly(c), 4.0 * c.k2)));
  return u;
}

WaveField example_dudt_as_listed(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  WaveField u = closed_form_dudt_u12(params, grid);
  u[2].set_cos(1, u[1].cos(1));
  u[2].set_cos(2, u[1].cos(2));
  return u;
}

ScalarWave example_div_coeffs(const FlowParams& params, const GridPtr& grid) {
  require_beta(params);
  const Consts c(params);
  const double a = c.a, b = c.b, re = c.re, k2 = c.k2, k = c.k;
  const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2;
  const double e2 = std::exp(2 * k), e4 = std::exp(4 * k), e8 = std::exp(8 * k);
  const double k3h = std::pow(k2, 1.5);
  const double c1 = 3 * e2 + k - e2 * k + 3;
  const double c2 = (16 * e4 - 16) * std::pow(k2, 3) - (90 * e4 + 90) * k3h + a2 * (45 * e4 - 45) +
                    a4 * (84 * e4 - 84) + b2 * (45 * e4 - 45) + b4 * (84 * e4 - 84) - a2 * (48 * e4 + 48) * k3h -
                    b2 * (48 * e4 + 48) * k3h + a2 * b2 * (168 * e4 - 168);
  ScalarWave d(params, grid, 2);
  d.set_cos(1, Profile::from_function(*grid, [&](double y) {
    return 8 * std::exp(-y * k) * (std::exp((2 * y + 1) * k) - std::exp(k)) * c1 / (re * (e4 - 1));
  }));
  d.set_cos(2, Profile::from_function(*grid, [&](double y) {
    return -std::exp(-2 * (y - 1) * k) * (std::exp(4 * y * k) + 1) / ((e8 - 1) * std::pow(k2, 4)) * c2;
  }));
  return d;
}

CcCoefficients example_cc_coeffs(const FlowParams& params) {
  require_beta(params);
  const Consts c(params);
  const double a = c.a, b = c.b, re = c.re, k2 = c.k2, k = c.k;
  const double a2 = a * a, b2 = b * b, a4 = a2 * a2, b4 = b2 * b2, a6 = a4 * a2, b6 = b4 * b2;
  const double e2 = std::exp(2 * k), e4 = std::exp(4 * k);
  const double k7h = std::pow(k2, 3.5);

  CcCoefficients out;
  out.c3 = (2 * a2 + 2 * b2 - 15) / (2 * k2 * k2) - 1.0 / k2 +
           (2 * a4 + 4 * a2 * b2 + 6 * a2 + 2 * b4 + 6 * b2 - 45) / (2 * std::pow(k2, 3)) +
           (-4 * a6 - 12 * a4 * b2 + 2 * a4 - 12 * a2 * b4 + 4 * a2 * b2 + 6 * a2 - 4 * b6 + 2 * b4 + 6 * b2 - 45) /
               (4 * std::pow(k2, 4)) +
           (24 * a2 + 24 * b2 + 45) / (2 * (e4 - 1) * k7h) + 3 * e4 * (8 * a2 + 8 * b2 + 15) / (2 * (e4 - 1) * k7h);

  const double tanh_part = (e2 - 1) / (re * (e2 + 1) * k);
  auto& x = out.top[static_cast<int>(Direction::X)];
  auto& z = out.top[static_cast<int>(Direction::Z)];
  x[1].sin = 8 * a * tanh_part;
  x[2].sin = -2 * a * out.c3;
  z[1].sin = 8 * b * tanh_part - 24.0 / (re * b);
  z[2].sin = -2 * b * out.c3;
  return out;
}

namespace {

void accumulate(Discrepancy& d, const ScalarWave& got, const ScalarWave& want) {
  const int jmax = std::max(got.max_harmonic(), want.max_harmonic());
  for (int j = 0; j <= jmax; ++j) {
    d.max_abs = std::max({d.max_abs, (got.cos(j).values() - want.cos(j).values()).lpNorm<Eigen::Infinity>(),
                          (got.sin(j).values() - want.sin(j).values()).lpNorm<Eigen::Infinity>()});
    d.reference = std::max({d.reference, want.cos(j).max_abs(), want.sin(j).max_abs()});
  }
}

Discrepancy compare(std::string name, const WaveField& got, const WaveField& want) {
  Discrepancy d{std::move(name)};
  for (int k = 0; k < 3; ++k) accumulate(d, got[k], want[k]);
  return d;
}

}  // namespace

std::vector<Discrepancy> compare_pipeline(const FlowParams& params, const GridPtr& grid) {
  const WaveField u0 = example_field(params, grid);
  const double re = params.reynolds;
  std::vector<Discrepancy> out;
  out.push_back(compare("vorticity", curl(u0), example_vorticity(params, grid)));
  out.push_back(compare("forcing", forcing(u0, re), example_forcing(params, grid)));
  const WaveField dudt = solve_dudt(u0, re, grid);
  out.push_back(compare("dudt", dudt, example_dudt(params, grid)));
  Discrepancy div{"divergence_defect"};
  accumulate(div, divergence(dudt), example_div_coeffs(params, grid));
  out.push_back(div);

  const TangentialResidual tr = tangential_residual(u0, solve_pressure(u0, re, grid).pressure, re);
  const CcCoefficients cc = example_cc_coeffs(params);
  Discrepancy wall{"tangential_residual_top"};
  for (int d = 0; d < 2; ++d)
    for (int j = 0; j < 3; ++j) {
      const CoeffPair got = tr.at(Wall::Top, static_cast<Direction>(d), j);
      const CoeffPair& want = cc.top[d][j];
      wall.max_abs = std::max({wall.max_abs, std::abs(got.cos - want.cos), std::abs(got.sin - want.sin)});
      wall.reference = std::max({wall.reference, std::abs(want.cos), std::abs(want.sin)});
    }
  out.push_back(wall);
  return out;
}

}  // namespace nscompat::oracle
