#include "nscompat/modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nscompat/errors.hpp"

namespace nscompat {

namespace {

using cplx = std::complex<double>;

void normalise(Eigen::VectorXcd& v) {
  Eigen::Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  const cplx ref = v(peak);
  if (std::abs(ref) > 0.0) v /= ref;
}

// Interpolates complex samples between grids.
Eigen::VectorXcd resample(const Eigen::VectorXcd& v, const ChebGrid& from, const ChebGrid& to) {
  if (from.n() == to.n()) return v;
  const Eigen::MatrixXd m = from.interpolation_matrix(to.points());
  return m.cast<cplx>() * v;
}

}  // namespace

WaveField poiseuille_base(const FlowParams& params, const GridPtr& grid) {
  WaveField u(params, grid, 0);
  u[0].set_cos(0, Profile::from_poly(*grid, Polynomial{1.0, 0.0, -1.0}));
  return u;
}

std::vector<ModeResult> orr_sommerfeld_spectrum(const FlowParams& params, int n) {
  params.validate();
  if (n < kMinOrrSommerfeldPoints)
    throw ConfigError("Orr-Sommerfeld solve needs at least " + std::to_string(kMinOrrSommerfeldPoints) + " points");
  const GridPtr grid = build_grid(n);
  const Eigen::MatrixXd& d1 = grid->d1();
  const Eigen::MatrixXd d2 = grid->d2();
  const Eigen::MatrixXd d4 = d2 * d2;
  const Eigen::VectorXd& y = grid->points();
  const double k2 = params.k2();
  const double a = params.alpha;
  const double inv_re = 1.0 / params.reynolds;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);

  const Eigen::VectorXd u = (1.0 - y.array().square()).matrix();
  const Eigen::MatrixXd lap = d2 - k2 * eye;
  const Eigen::MatrixXd lap2 = d4 - 2.0 * k2 * d2 + k2 * k2 * eye;
  const cplx I(0.0, 1.0);
  // λ (D² - k²) v = [-iαU(D² - k²) + iαU'' + (1/Re)(D² - k²)²] v,  U'' = -2
  Eigen::MatrixXcd A = (-I * a) * (u.asDiagonal() * lap).cast<cplx>();
  A.diagonal().array() += I * a * (-2.0);
  A += (inv_re * lap2).cast<cplx>();
  const Eigen::MatrixXcd B = lap.cast<cplx>();

  // v(±1) = 0 removes the end samples; v'(±1) = 0 fixes samples 1 and n-2 in terms of the rest.
  const int m = n - 4;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, m);
  for (int i = 0; i < m; ++i) T(i + 2, i) = 1.0;
  Eigen::Matrix2d c;
  c << d1(0, 1), d1(0, n - 2), d1(n - 1, 1), d1(n - 1, n - 2);
  Eigen::MatrixXd rhs(2, m);
  rhs.row(0) = -d1.row(0).segment(2, m);
  rhs.row(1) = -d1.row(n - 1).segment(2, m);
  const Eigen::MatrixXd ends = c.fullPivLu().solve(rhs);
  T.row(1) = ends.row(0);
  T.row(n - 2) = ends.row(1);

  const Eigen::MatrixXcd Tc = T.cast<cplx>();
  const Eigen::MatrixXcd Ar = A.middleRows(2, m) * Tc;
  const Eigen::MatrixXcd Br = B.middleRows(2, m) * Tc;
  Eigen::PartialPivLU<Eigen::MatrixXcd> blu(Br);
  const Eigen::MatrixXcd M = blu.solve(Ar);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, true);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "Orr-Sommerfeld eigen-solve failed (n=" << n << ", rcond(B)=" << blu.rcond() << ")";
    throw NumericalError(os.str());
  }

  std::vector<ModeResult> modes;
  modes.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXcd v = Tc * es.eigenvectors().col(i);
    normalise(v);
    modes.push_back({es.eigenvalues()(i), std::move(v), grid, params});
  }
  std::sort(modes.begin(), modes.end(),
            [](const ModeResult& l, const ModeResult& r) { return l.growth_rate() > r.growth_rate(); });
  return modes;
}

std::vector<ModeResult> solve_orr_sommerfeld(const FlowParams& params, int n) {
  const auto coarse = orr_sommerfeld_spectrum(params, n);
  const auto fine = orr_sommerfeld_spectrum(params, n + 8);
  std::vector<ModeResult> out;
  for (const auto& mode : coarse) {
    if (!std::isfinite(mode.eigenvalue.real()) || !std::isfinite(mode.eigenvalue.imag())) continue;
    const auto best = std::min_element(fine.begin(), fine.end(), [&](const ModeResult& l, const ModeResult& r) {
      return std::abs(l.eigenvalue - mode.eigenvalue) < std::abs(r.eigenvalue - mode.eigenvalue);
    });
    if (best == fine.end()) continue;
    if (std::abs(best->eigenvalue - mode.eigenvalue) > kSpuriousModeTol * std::max(1.0, std::abs(mode.eigenvalue)))
      continue;
    // align the complex scale before comparing; peak-based phases can differ between grids
    const Eigen::VectorXcd refined = resample(best->vhat, *best->grid, *mode.grid);
    const cplx scale = refined.dot(mode.vhat) / refined.squaredNorm();
    if ((scale * refined - mode.vhat).cwiseAbs().maxCoeff() > kSpuriousModeTol) continue;
    out.push_back(mode);
  }
  return out;
}

WaveField mode_to_field(const ModeResult& mode, double amplitude, bool include_base, const GridPtr& grid) {
  const FlowParams& p = mode.params;
  const Eigen::VectorXcd v = resample(mode.vhat, *mode.grid, *grid);
  const Eigen::VectorXd vr = v.real();
  const Eigen::VectorXd vi = v.imag();
  const Eigen::VectorXd dvr = grid->d1() * vr;
  const Eigen::VectorXd dvi = grid->d1() * vi;
  const double k2 = p.k2();

  WaveField u(p, grid, 1);
  if (amplitude != 0.0) {
    // û = iα v̂'/k², ŵ = iβ v̂'/k²;  Re[c e^{iθ}] = Re(c) cos θ - Im(c) sin θ
    u[0].set_cos(1, Profile(-amplitude * p.alpha / k2 * dvi));
    u[0].set_sin(1, Profile(-amplitude * p.alpha / k2 * dvr));
    u[1].set_cos(1, Profile(amplitude * vr));
    u[1].set_sin(1, Profile(-amplitude * vi));
    u[2].set_cos(1, Profile(-amplitude * p.beta / k2 * dvi));
    u[2].set_sin(1, Profile(-amplitude * p.beta / k2 * dvr));
  }
  if (include_base) u += poiseuille_base(p, grid);
  return u;
}

}  // namespace nscompat
