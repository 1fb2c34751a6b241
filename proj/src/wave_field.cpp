#include "nscompat/wave_field.hpp"

#include <cmath>
#include <sstream>

#include "nscompat/errors.hpp"

namespace nscompat {

void FlowParams::validate() const {
  auto bad = [](double v) { return !(v > 0.0) || !std::isfinite(v); };
  if (bad(alpha) || bad(beta) || bad(reynolds)) {
    std::ostringstream os;
    os << "flow parameters must be positive and finite (alpha=" << alpha << ", beta=" << beta
       << ", reynolds=" << reynolds << ")";
    throw DomainError(os.str());
  }
}

// ---------------------------------------------------------------- ScalarWave

ScalarWave::ScalarWave(FlowParams params, GridPtr grid, int max_harmonic)
    : params_(params), grid_(std::move(grid)) {
  if (!grid_) throw ConfigError("ScalarWave needs a grid");
  if (max_harmonic < 0) throw ConfigError("negative harmonic index");
  zero_ = Profile::zero(*grid_);
  harmonics_.assign(static_cast<std::size_t>(max_harmonic) + 1, Harmonic{zero_, zero_});
}

void ScalarWave::ensure(int j) {
  if (j < 0) throw ConfigError("negative harmonic index");
  if (j > max_harmonic()) harmonics_.resize(static_cast<std::size_t>(j) + 1, Harmonic{zero_, zero_});
}

const Profile& ScalarWave::cos(int j) const {
  if (j < 0 || j > max_harmonic()) return zero_;
  return harmonics_[static_cast<std::size_t>(j)].cos;
}

const Profile& ScalarWave::sin(int j) const {
  if (j < 0 || j > max_harmonic()) return zero_;
  return harmonics_[static_cast<std::size_t>(j)].sin;
}

void ScalarWave::set_cos(int j, Profile p) {
  if (p.size() != grid_->n()) throw ConfigError("profile size does not match grid");
  ensure(j);
  harmonics_[static_cast<std::size_t>(j)].cos = std::move(p);
}

void ScalarWave::set_sin(int j, Profile p) {
  if (p.size() != grid_->n()) throw ConfigError("profile size does not match grid");
  if (j == 0) {
    if (!p.is_zero()) throw ConfigError("harmonic 0 carries no sine profile");
    return;
  }
  ensure(j);
  harmonics_[static_cast<std::size_t>(j)].sin = std::move(p);
}

void ScalarWave::add_cos(int j, const Profile& p) {
  if (p.is_zero()) return;
  ensure(j);
  harmonics_[static_cast<std::size_t>(j)].cos += p;
}

void ScalarWave::add_sin(int j, const Profile& p) {
  if (j == 0 || p.is_zero()) return;
  ensure(j);
  harmonics_[static_cast<std::size_t>(j)].sin += p;
}

bool ScalarWave::is_zero() const {
  for (const auto& h : harmonics_)
    if (!h.cos.is_zero() || !h.sin.is_zero()) return false;
  return true;
}

double ScalarWave::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& h : harmonics_) m = std::max({m, h.cos.max_abs(), h.sin.max_abs()});
  return m;
}

double ScalarWave::eval(double x, double y, double z) const {
  if (!(y >= -1.0 && y <= 1.0)) {
    std::ostringstream os;
    os << "y = " << y << " outside [-1, 1]";
    throw DomainError(os.str());
  }
  const double theta = params_.alpha * x + params_.beta * z;
  double acc = 0.0;
  for (int j = 0; j <= max_harmonic(); ++j) {
    const auto& h = harmonics_[static_cast<std::size_t>(j)];
    if (!h.cos.is_zero()) acc += h.cos.at(*grid_, y) * std::cos(j * theta);
    if (j > 0 && !h.sin.is_zero()) acc += h.sin.at(*grid_, y) * std::sin(j * theta);
  }
  return acc;
}

ScalarWave ScalarWave::trimmed() const {
  ScalarWave out = *this;
  while (out.harmonics_.size() > 1 && out.harmonics_.back().cos.is_zero() && out.harmonics_.back().sin.is_zero())
    out.harmonics_.pop_back();
  return out;
}

ScalarWave ScalarWave::resampled(const GridPtr& target) const {
  ScalarWave out(params_, target, max_harmonic());
  for (int j = 0; j <= max_harmonic(); ++j) {
    out.set_cos(j, cos(j).resampled(*grid_, *target));
    if (j > 0) out.set_sin(j, sin(j).resampled(*grid_, *target));
  }
  return out;
}

// d/dx and d/dz only differ in the wavenumber multiplying j.
ScalarWave ScalarWave::tangential_derivative(double wavenumber) const {
  ScalarWave out(params_, grid_, max_harmonic());
  for (int j = 1; j <= max_harmonic(); ++j) {
    const double f = j * wavenumber;
    out.set_cos(j, sin(j) * f);
    out.set_sin(j, cos(j) * (-f));
  }
  return out;
}

ScalarWave ScalarWave::ddx() const { return tangential_derivative(params_.alpha); }
ScalarWave ScalarWave::ddz() const { return tangential_derivative(params_.beta); }

ScalarWave ScalarWave::ddy() const {
  ScalarWave out(params_, grid_, max_harmonic());
  for (int j = 0; j <= max_harmonic(); ++j) {
    out.set_cos(j, cos(j).derivative(*grid_));
    if (j > 0) out.set_sin(j, sin(j).derivative(*grid_));
  }
  return out;
}

ScalarWave ScalarWave::laplacian() const {
  ScalarWave out(params_, grid_, max_harmonic());
  const double k2 = params_.k2();
  for (int j = 0; j <= max_harmonic(); ++j) {
    const double m = -static_cast<double>(j) * j * k2;
    out.set_cos(j, cos(j).second_derivative(*grid_) + cos(j) * m);
    if (j > 0) out.set_sin(j, sin(j).second_derivative(*grid_) + sin(j) * m);
  }
  return out;
}

namespace {

void require_compatible(const ScalarWave& a, const ScalarWave& b) {
  if (!(a.params() == b.params())) throw ConfigError("fields have different flow parameters");
  if (a.grid().n() != b.grid().n()) throw ConfigError("fields live on grids of different size");
}

}  // namespace

ScalarWave& ScalarWave::operator+=(const ScalarWave& other) {
  require_compatible(*this, other);
  for (int j = 0; j <= other.max_harmonic(); ++j) {
    add_cos(j, other.cos(j));
    add_sin(j, other.sin(j));
  }
  return *this;
}

ScalarWave& ScalarWave::operator-=(const ScalarWave& other) {
  require_compatible(*this, other);
  for (int j = 0; j <= other.max_harmonic(); ++j) {
    add_cos(j, -other.cos(j));
    add_sin(j, -other.sin(j));
  }
  return *this;
}

ScalarWave& ScalarWave::operator*=(double s) {
  for (auto& h : harmonics_) {
    h.cos *= s;
    h.sin *= s;
  }
  return *this;
}

// ----------------------------------------------------------------- WaveField

WaveField::WaveField(FlowParams params, GridPtr grid, int max_harmonic)
    : comp_{ScalarWave(params, grid, max_harmonic), ScalarWave(params, grid, max_harmonic),
            ScalarWave(params, grid, max_harmonic)} {}

WaveField::WaveField(ScalarWave u1, ScalarWave u2, ScalarWave u3)
    : comp_{std::move(u1), std::move(u2), std::move(u3)} {
  require_compatible(comp_[0], comp_[1]);
  require_compatible(comp_[0], comp_[2]);
}

int WaveField::max_harmonic() const {
  return std::max({comp_[0].max_harmonic(), comp_[1].max_harmonic(), comp_[2].max_harmonic()});
}

bool WaveField::is_zero() const { return comp_[0].is_zero() && comp_[1].is_zero() && comp_[2].is_zero(); }

double WaveField::max_abs_coeff() const {
  return std::max({comp_[0].max_abs_coeff(), comp_[1].max_abs_coeff(), comp_[2].max_abs_coeff()});
}

WaveField WaveField::resampled(const GridPtr& target) const {
  return WaveField(comp_[0].resampled(target), comp_[1].resampled(target), comp_[2].resampled(target));
}

WaveField& WaveField::operator+=(const WaveField& other) {
  for (int k = 0; k < 3; ++k) comp_[k] += other.comp_[k];
  return *this;
}

WaveField& WaveField::operator-=(const WaveField& other) {
  for (int k = 0; k < 3; ++k) comp_[k] -= other.comp_[k];
  return *this;
}

WaveField& WaveField::operator*=(double s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

// ------------------------------------------------------------------ products

ScalarWave harmonic_product(const ScalarWave& f, const ScalarWave& g) {
  require_compatible(f, g);
  ScalarWave out(f.params(), f.grid_ptr(), f.max_harmonic() + g.max_harmonic());
  for (int m = 0; m <= f.max_harmonic(); ++m) {
    const Profile& fa = f.cos(m);
    const Profile& fb = f.sin(m);
    if (fa.is_zero() && fb.is_zero()) continue;
    for (int n = 0; n <= g.max_harmonic(); ++n) {
      const Profile& ga = g.cos(n);
      const Profile& gb = g.sin(n);
      if (ga.is_zero() && gb.is_zero()) continue;
      const int sum = m + n;
      const int diff = m - n;
      const int adiff = std::abs(diff);
      // sin(diff θ) = sign(diff) sin(|diff| θ)
      const double sd = diff > 0 ? 0.5 : (diff < 0 ? -0.5 : 0.0);
      if (!fa.is_zero() && !ga.is_zero()) {
        const Profile p = fa * ga * 0.5;
        out.add_cos(adiff, p);
        out.add_cos(sum, p);
      }
      if (!fb.is_zero() && !gb.is_zero()) {
        const Profile p = fb * gb * 0.5;
        out.add_cos(adiff, p);
        out.add_cos(sum, -p);
      }
      if (!fa.is_zero() && !gb.is_zero()) {
        // cos(mθ) sin(nθ) = ½[sin((m+n)θ) - sin((m-n)θ)]
        const Profile p = fa * gb;
        out.add_sin(sum, p * 0.5);
        if (sd != 0.0) out.add_sin(adiff, p * (-sd));
      }
      if (!fb.is_zero() && !ga.is_zero()) {
        // sin(mθ) cos(nθ) = ½[sin((m+n)θ) + sin((m-n)θ)]
        const Profile p = fb * ga;
        out.add_sin(sum, p * 0.5);
        if (sd != 0.0) out.add_sin(adiff, p * sd);
      }
    }
  }
  return out;
}

std::array<double, 3> eval_field(const WaveField& f, double x, double y, double z) {
  return {f[0].eval(x, y, z), f[1].eval(x, y, z), f[2].eval(x, y, z)};
}

}  // namespace nscompat
