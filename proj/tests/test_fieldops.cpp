#include <cmath>

#include <gtest/gtest.h>

#include "nscompat/fieldops.hpp"
#include "nscompat/oracle.hpp"
#include "test_util.hpp"

namespace nscompat {
namespace {

using testing::Rng;

double rel_max(const WaveField& a, const WaveField& b) {
  return testing::max_diff(a, b) / std::max({b.max_abs_coeff(), a.max_abs_coeff(), 1e-300});
}

TEST(Divergence, ExampleFieldIsSolenoidal) {
  for (const FlowParams& p : testing::kParamTriples) {
    const WaveField u = oracle::example_field(p, build_grid(32));
    EXPECT_LT(divergence(u).max_abs_coeff(), 1e-12);
  }
}

TEST(Divergence, SignOfStreamwiseTerm) {
  // u1 = y² sin θ  gives  ∂u1/∂x = α y² cos θ
  const FlowParams p{1.5, 1.0, 80};
  const GridPtr g = build_grid(16);
  WaveField u(p, g, 1);
  u[0].set_sin(1, Profile::from_poly(*g, Polynomial{0.0, 0.0, 1.0}));
  const ScalarWave d = divergence(u);
  ASSERT_TRUE(d.cos(1).poly().has_value());
  EXPECT_EQ(*d.cos(1).poly(), Polynomial({0.0, 0.0, 1.5}));
  EXPECT_TRUE(d.sin(1).is_zero());
}

TEST(Divergence, MatchesPointwiseFiniteDifference) {
  Rng rng(8);
  const FlowParams p{0.7, 1.3, 60};
  const WaveField u = testing::random_field(p, build_grid(32), rng);
  const ScalarWave d = divergence(u);
  const double x = 0.4, y = 0.25, z = -1.1, h = 1e-5;
  auto c = [&](int k, double dx, double dy, double dz) { return u[k].eval(x + dx, y + dy, z + dz); };
  const double fd = (c(0, h, 0, 0) - c(0, -h, 0, 0) + c(1, 0, h, 0) - c(1, 0, -h, 0) + c(2, 0, 0, h) - c(2, 0, 0, -h)) / (2 * h);
  EXPECT_NEAR(d.eval(x, y, z), fd, 1e-7);
}

TEST(Curl, ExampleMatchesClosedForm) {
  for (const FlowParams& p : testing::kParamTriples) {
    const GridPtr g = build_grid(32);
    EXPECT_LT(rel_max(curl(oracle::example_field(p, g)), oracle::example_vorticity(p, g)), 1e-13);
  }
}

TEST(Identities, CurlCurl) {
  Rng rng(21);
  int samples = 0;
  for (const FlowParams& p : testing::kParamTriples) {
    const GridPtr g = build_grid(32);
    for (int i = 0; i < 20; ++i, ++samples) {
      const WaveField u = testing::random_field(p, g, rng);
      EXPECT_LT(rel_max(curl(curl(u)), gradient(divergence(u)) - laplacian(u)), 1e-9);
    }
  }
  EXPECT_GE(samples, 50);
}

TEST(Identities, DivergenceOfCurl) {
  Rng rng(22);
  int samples = 0;
  for (const FlowParams& p : testing::kParamTriples) {
    const GridPtr g = build_grid(32);
    for (int i = 0; i < 20; ++i, ++samples) {
      const WaveField u = testing::random_field(p, g, rng);
      const WaveField w = curl(u);
      EXPECT_LT(divergence(w).max_abs_coeff(), 1e-9 * w.max_abs_coeff() * std::sqrt(p.k2() + 1.0));
    }
  }
  EXPECT_GE(samples, 50);
}

TEST(Identities, ForcingIsSolenoidal) {
  Rng rng(23);
  int samples = 0;
  for (const FlowParams& p : testing::kParamTriples) {
    const GridPtr g = build_grid(48);
    for (int i = 0; i < 20; ++i, ++samples) {
      const WaveField u = testing::random_admissible(p, g, rng);
      const WaveField f = forcing(u, p.reynolds);
      EXPECT_LT(relative_divergence(f), 1e-9);
    }
  }
  EXPECT_GE(samples, 50);
}

TEST(Forcing, IsMinusCurlOfVorticityRhs) {
  Rng rng(4);
  const FlowParams p{1, 1, 80};
  const WaveField u = testing::random_admissible(p, build_grid(32), rng);
  EXPECT_LT(rel_max(forcing(u, p.reynolds), curl(vorticity_rhs(u, p.reynolds)) * -1.0), 1e-14);
}

TEST(VorticityRhs, ViscousOnlyForLinearShear) {
  // u1 = y: vorticity is constant, so both transport terms and the Laplacian vanish.
  const FlowParams p{};
  const GridPtr g = build_grid(16);
  WaveField u(p, g, 0);
  u[0].set_cos(0, Profile::from_poly(*g, Polynomial{0.0, 1.0}));
  EXPECT_LT(vorticity_rhs(u, p.reynolds).max_abs_coeff(), 1e-13);
}

TEST(Laplacian, OfHarmonicPolynomial) {
  const FlowParams p{1, 2, 80};
  const GridPtr g = build_grid(16);
  WaveField u(p, g, 2);
  u[1].set_sin(2, Profile::from_poly(*g, Polynomial{0.0, 0.0, 0.0, 1.0}));  // y³ sin 2θ
  const WaveField l = laplacian(u);
  ASSERT_TRUE(l[1].sin(2).poly().has_value());
  EXPECT_LT((l[1].sin(2).values() - Profile::from_poly(*g, Polynomial{0.0, 6.0, 0.0, -20.0}).values()).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(Admissibility, ExampleAndZeroPass) {
  const FlowParams p{};
  EXPECT_TRUE(check_admissible(oracle::example_field(p, build_grid(32))).ok());
  EXPECT_TRUE(check_admissible(WaveField(p, build_grid(32), 2)).ok());
}

TEST(Admissibility, FirstPowerWallFactorBreaksSpanwiseNoSlip) {
  // u2 = cos θ (y²-1) with u3 from continuity: u3 ∝ d/dy (y²-1) = 2y, nonzero at both walls.
  const FlowParams p{};
  const GridPtr g = build_grid(32);
  WaveField u(p, g, 1);
  const Polynomial a2{-1.0, 0.0, 1.0};
  u[1].set_cos(1, Profile::from_poly(*g, a2));
  u[2].set_sin(1, Profile::from_poly(*g, a2.derivative() * (-1.0 / p.beta)));
  const Admissibility a = check_admissible(u);
  ASSERT_FALSE(a.ok());
  bool mentions_u3 = false;
  for (const auto& v : a.violations) mentions_u3 |= v.find("u3") != std::string::npos;
  EXPECT_TRUE(mentions_u3);
  EXPECT_NEAR(a.max_wall_velocity, 2.0, 1e-12);
}

TEST(Admissibility, DivergentFieldRejected) {
  const FlowParams p{};
  const GridPtr g = build_grid(32);
  WaveField u(p, g, 1);
  u[1].set_cos(1, Profile::from_poly(*g, testing::wall2()));
  const Admissibility a = check_admissible(u);
  EXPECT_FALSE(a.ok());
  EXPECT_GT(a.relative_divergence, 1e-4);
}

TEST(Admissibility, SmallDivergenceOnlyWarns) {
  const FlowParams p{};
  const GridPtr g = build_grid(32);
  WaveField u = oracle::example_field(p, g);
  u[1].set_cos(1, u[1].cos(1) * (1.0 + 1e-6));
  const Admissibility a = check_admissible(u);
  EXPECT_TRUE(a.ok());
  EXPECT_FALSE(a.warnings.empty());
}

}  // namespace
}  // namespace nscompat
