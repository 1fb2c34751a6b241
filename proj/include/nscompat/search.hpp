#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nscompat/wave_field.hpp"

namespace nscompat::search {

/// Free polynomial profiles of the harmonic-1 ansatz, in coefficient-vector order.
enum class Slot { U1Cos = 0, U1Sin = 1, U2Cos = 2, U2Sin = 3 };
inline constexpr int kSlots = 4;

/// Which equations the root finder drives to zero.
enum class ResidualKind {
  /// Divergence defect of ∂u/∂t sampled at interior collocation points (harmonics 1 and 2).
  Defect,
  /// Defect samples plus all wall tangential-residual coefficients.
  Full,
  /// Cosine entries of the defect only (harmonics 1 and 2), i.e. the defect restricted to the
  /// phase line θ = 0 harmonic by harmonic. Diagnostic: the four-digit reference example is a
  /// root of this reduced system with u1 held fixed, not of Defect.
  DefectCosine,
};

/// u1 = c̃(y)(y²-1),  u2 = c̃(y)(y²-1)²  on harmonic 1; u3 follows from continuity.
struct AnsatzSpec {
  int degree = 4;
  FlowParams params;
  std::array<bool, kSlots> free{true, true, true, true};
  /// c̃ for slots that are not free (ascending powers); ignored for free slots.
  std::array<Polynomial, kSlots> fixed;
  int grid_n = 64;
  ResidualKind kind = ResidualKind::Full;

  int coeffs_per_slot() const { return degree + 1; }
  int num_free() const;
  int num_unknowns() const { return num_free() * coeffs_per_slot(); }
};

/// Builds the field; coefficient blocks of length degree+1 (ascending powers) follow slot order,
/// skipping fixed slots. Throws ConfigError on a length mismatch, DomainError for beta <= 0.
WaveField assemble(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs);

/// Residual vector whose zeros are the compatible fields of the ansatz.
Eigen::VectorXd residual(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs);

struct Measures {
  double relative_defect = 0.0;
  double relative_tangential = 0.0;
  double wall_normal_fraction = 0.0;  // max|u2 coeffs| / max|all coeffs|
};
Measures measure(const AnsatzSpec& spec, const Eigen::VectorXd& coeffs);

struct IterationRecord {
  int iteration = 0;
  double residual_norm = 0.0;
  double relative_defect = 0.0;
  double relative_tangential = 0.0;
  double damping = 0.0;
};

struct SearchOptions {
  int max_iterations = 50;
  /// Success threshold on the relative defect (and tangential residual for ResidualKind::Full).
  double target = 1e-10;
  double jacobian_step = 1e-7;
  /// Solutions whose wall-normal part is below this fraction of the field are trivial.
  double trivial_threshold = 1e-3;
};

struct SearchResult {
  Eigen::VectorXd coeffs;
  double residual_norm = 0.0;
  Measures measures;
  bool converged = false;
  bool trivial = false;
  std::uint64_t seed = 0;
  std::vector<IterationRecord> trace;

  bool success() const { return converged && !trivial; }
};

/// Uniform(-1, 1) start vector, reproducible across platforms for a given seed.
Eigen::VectorXd random_coeffs(const AnsatzSpec& spec, std::uint64_t seed);

/// Damped Gauss–Newton (Levenberg–Marquardt) with forward-difference Jacobian.
/// Non-convergence is reported in the result, not thrown.
SearchResult find_compatible(const AnsatzSpec& spec, const Eigen::VectorXd& initial,
                             const SearchOptions& options = {});
SearchResult find_compatible(const AnsatzSpec& spec, std::uint64_t seed, const SearchOptions& options = {});

/// Random restarts from seed, seed+1, ... until a nontrivial root is found.
/// Returns every attempt; the last one is the success when any succeeded.
std::vector<SearchResult> find_with_restarts(const AnsatzSpec& spec, std::uint64_t seed, int max_restarts,
                                             const SearchOptions& options = {});

/// Four-digit c̃ coefficients of the reference candidate at (α, β, Re) = (1, 1, 80),
/// in slot order, ascending powers.
std::array<Polynomial, kSlots> reference_example();

/// Flattens c̃ polynomials of the free slots into a coefficient vector (zero-padded to degree).
Eigen::VectorXd flatten(const AnsatzSpec& spec, const std::array<Polynomial, kSlots>& polys);

}  // namespace nscompat::search
