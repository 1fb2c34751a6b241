#include "nscompat/fieldops.hpp"

#include <sstream>

namespace nscompat {

ScalarWave divergence(const WaveField& f) { return f[0].ddx() + f[1].ddy() + f[2].ddz(); }

WaveField gradient(const ScalarWave& s) { return WaveField(s.ddx(), s.ddy(), s.ddz()); }

WaveField curl(const WaveField& f) {
  return WaveField(f[2].ddy() - f[1].ddz(),
                   f[0].ddz() - f[2].ddx(),
                   f[1].ddx() - f[0].ddy());
}

WaveField laplacian(const WaveField& f) {
  return WaveField(f[0].laplacian(), f[1].laplacian(), f[2].laplacian());
}

WaveField vorticity_rhs(const WaveField& u0, double reynolds) {
  const WaveField omega = curl(u0);
  WaveField rhs = laplacian(omega) * (1.0 / reynolds);
  for (int i = 0; i < 3; ++i) {
    const WaveField grad_omega = gradient(omega[i]);
    const WaveField grad_u = gradient(u0[i]);
    for (int j = 0; j < 3; ++j) {
      if (!u0[j].is_zero() && !grad_omega[j].is_zero()) rhs[i] -= harmonic_product(u0[j], grad_omega[j]);
      if (!omega[j].is_zero() && !grad_u[j].is_zero()) rhs[i] += harmonic_product(omega[j], grad_u[j]);
    }
  }
  return rhs;
}

WaveField forcing(const WaveField& u0, double reynolds) { return curl(vorticity_rhs(u0, reynolds)) * -1.0; }

double relative_divergence(const WaveField& f) {
  const ScalarWave tx = f[0].ddx();
  const ScalarWave ty = f[1].ddy();
  const ScalarWave tz = f[2].ddz();
  const double scale = std::max({tx.max_abs_coeff(), ty.max_abs_coeff(), tz.max_abs_coeff()});
  if (scale == 0.0) return 0.0;
  return (tx + ty + tz).max_abs_coeff() / scale;
}

Admissibility check_admissible(const WaveField& u0, double div_error_tol) {
  Admissibility out;
  static constexpr const char* kNames[] = {"u1", "u2", "u3"};
  const double scale = std::max(u0.max_abs_coeff(), 1.0e-300);
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j <= u0[k].max_harmonic(); ++j) {
      for (int part = 0; part < 2; ++part) {
        const Profile& p = part == 0 ? u0[k].cos(j) : u0[k].sin(j);
        for (int wall = 0; wall < 2; ++wall) {
          const double v = wall == 0 ? p.top() : p.bottom();
          out.max_wall_velocity = std::max(out.max_wall_velocity, std::abs(v));
          if (std::abs(v) > kNoSlipTol * scale) {
            std::ostringstream os;
            os << "no-slip violated: " << kNames[k] << ' ' << (part == 0 ? "cos" : "sin") << " harmonic " << j
               << " at y=" << (wall == 0 ? "+1" : "-1") << ", value " << v;
            out.violations.push_back(os.str());
          }
        }
      }
    }
  }
  out.relative_divergence = relative_divergence(u0);
  if (out.relative_divergence > div_error_tol) {
    std::ostringstream os;
    os << "continuity violated: relative divergence " << out.relative_divergence;
    out.violations.push_back(os.str());
  } else if (out.relative_divergence > kDivergenceWarnTol) {
    std::ostringstream os;
    os << "field is only approximately divergence-free: relative divergence " << out.relative_divergence;
    out.warnings.push_back(os.str());
  }
  return out;
}

}  // namespace nscompat
