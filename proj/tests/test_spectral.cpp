#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nscompat/errors.hpp"
#include "nscompat/oracle.hpp"
#include "test_util.hpp"

namespace nscompat {
namespace {

using testing::Rng;

TEST(Grid, EndpointsExact) {
  for (int n : {8, 9, 40, 64}) {
    const GridPtr g = build_grid(n);
    EXPECT_EQ(g->points()(0), 1.0);
    EXPECT_EQ(g->points()(n - 1), -1.0);
    for (int k = 1; k < n; ++k) EXPECT_LT(g->points()(k), g->points()(k - 1));
  }
}

TEST(Grid, TooFewPointsRejected) {
  EXPECT_THROW(build_grid(7), ConfigError);
  EXPECT_THROW(build_grid(0), ConfigError);
}

TEST(Grid, CachedInstancesShared) { EXPECT_EQ(build_grid(33).get(), build_grid(33).get()); }

TEST(Grid, CubicDerivative) {
  const GridPtr g = build_grid(16);
  const Eigen::VectorXd y = g->points();
  const Eigen::VectorXd d = g->d1() * y.array().cube().matrix();
  EXPECT_LT((d.array() - 3.0 * y.array().square()).abs().maxCoeff(), 1e-12);
}

TEST(Grid, ExponentialDerivative) {
  const GridPtr g = build_grid(64);
  const Eigen::VectorXd e = g->points().array().exp();
  EXPECT_LT((g->d1() * e - e).lpNorm<Eigen::Infinity>(), 1e-10);
}

TEST(Grid, MonomialsDifferentiatedExactly) {
  const int n = 24;
  const GridPtr g = build_grid(n);
  const Eigen::ArrayXd y = g->points().array();
  for (int m = 1; m <= n - 2; ++m) {
    const Eigen::VectorXd d = g->d1() * y.pow(m).matrix();
    const Eigen::ArrayXd want = m * y.pow(m - 1);
    EXPECT_LT((d.array() - want).abs().maxCoeff(), 1e-11 * m * m) << "m=" << m;
  }
}

TEST(Grid, SecondDerivativeIsSquareOfFirst) {
  const GridPtr g = build_grid(48);
  EXPECT_LT((g->d2() - g->d1() * g->d1()).lpNorm<Eigen::Infinity>() / g->d2().lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(Grid, QuadratureAndInterpolation) {
  const GridPtr g = build_grid(20);
  const Eigen::VectorXd y = g->points();
  EXPECT_NEAR(g->integrate(y.array().square().matrix()), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(g->integrate(y.array().exp().matrix()), std::exp(1.0) - std::exp(-1.0), 1e-13);
  const Eigen::VectorXd v = y.array().cos();
  for (double t : {-0.93, -0.2, 0.0, 0.41, 0.999}) EXPECT_NEAR(g->interpolate(v, t), std::cos(t), 1e-13);
  EXPECT_DOUBLE_EQ(g->interpolate(v, g->points()(3)), v(3));
}

TEST(Polynomial, Algebra) {
  const Polynomial p{1.0, 2.0, 3.0};  // 1 + 2y + 3y²
  EXPECT_EQ(p.degree(), 2);
  EXPECT_DOUBLE_EQ(p(2.0), 17.0);
  EXPECT_EQ(p.derivative(), (Polynomial{2.0, 6.0}));
  EXPECT_EQ(p * Polynomial({0.0, 1.0}), Polynomial({0.0, 1.0, 2.0, 3.0}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(Polynomial::monomial(3, 2.0), Polynomial({0.0, 0.0, 0.0, 2.0}));
  EXPECT_DOUBLE_EQ(p.coeff(7), 0.0);
}

TEST(Profile, PolynomialTravelsThroughArithmetic) {
  const GridPtr g = build_grid(16);
  const Profile a = Profile::from_poly(*g, Polynomial{0.0, 1.0});
  const Profile b = Profile::from_poly(*g, Polynomial{1.0, 0.0, 1.0});
  const Profile c = a * b + 2.0 * a;
  ASSERT_TRUE(c.poly().has_value());
  EXPECT_EQ(*c.poly(), (Polynomial{0.0, 3.0, 0.0, 1.0}));
  const Profile s = Profile::from_function(*g, [](double y) { return std::sin(y); });
  EXPECT_FALSE((a + s).poly().has_value());
  EXPECT_NEAR(s.at(*g, 0.3), std::sin(0.3), 1e-12);
  EXPECT_EQ(c.derivative(*g).poly(), (Polynomial{3.0, 0.0, 3.0}));
}

TEST(FlowParams, Validation) {
  EXPECT_NO_THROW((FlowParams{1, 1, 80}.validate()));
  EXPECT_THROW((FlowParams{0, 1, 80}.validate()), DomainError);
  EXPECT_THROW((FlowParams{1, -1, 80}.validate()), DomainError);
  EXPECT_THROW((FlowParams{1, 1, 0}.validate()), DomainError);
  EXPECT_THROW((FlowParams{1, 1, NAN}.validate()), DomainError);
}

TEST(ScalarWave, ZeroHarmonicHasNoSine) {
  const GridPtr g = build_grid(16);
  ScalarWave s(FlowParams{}, g, 1);
  EXPECT_THROW(s.set_sin(0, Profile::from_poly(*g, Polynomial{1.0})), ConfigError);
  EXPECT_NO_THROW(s.set_sin(0, Profile::zero(*g)));
  EXPECT_TRUE(s.sin(5).is_zero());
}

TEST(EvalField, ZeroField) {
  const WaveField f(FlowParams{}, build_grid(16), 2);
  const auto v = eval_field(f, 0.3, -0.2, 1.7);
  EXPECT_EQ(v[0], 0.0);
  EXPECT_EQ(v[1], 0.0);
  EXPECT_EQ(v[2], 0.0);
}

TEST(EvalField, ExampleFieldPoints) {
  const FlowParams p{1, 1, 80};
  const WaveField f = oracle::example_field(p, build_grid(32));
  const auto at0 = eval_field(f, 0.0, 0.0, 0.0);
  EXPECT_NEAR(at0[0], 0.0, 1e-15);
  EXPECT_NEAR(at0[1], 1.0, 1e-15);
  EXPECT_NEAR(at0[2], 0.0, 1e-15);
  EXPECT_NEAR(eval_field(f, std::numbers::pi / 2, 0.5, 0.0)[1], 0.0, 1e-15);
  EXPECT_THROW(eval_field(f, 0.0, 1.0 + 1e-9, 0.0), DomainError);
}

TEST(EvalField, OffGridSamplesUseInterpolation) {
  const GridPtr g = build_grid(40);
  ScalarWave s(FlowParams{}, g, 1);
  s.set_cos(1, Profile::from_function(*g, [](double y) { return std::exp(y); }));
  const double x = 0.37, y = 0.123, z = -0.4;
  EXPECT_NEAR(s.eval(x, y, z), std::exp(y) * std::cos(x + z), 1e-13);
}

TEST(EvalField, Linear) {
  Rng rng(11);
  const FlowParams p{1.3, 0.7, 50};
  const GridPtr g = build_grid(24);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const WaveField a = testing::random_field(p, g, rng);
    const WaveField b = testing::random_field(p, g, rng);
    const double x = 5 * u(rng), y = u(rng), z = 5 * u(rng);
    const auto va = eval_field(a, x, y, z), vb = eval_field(b, x, y, z), vs = eval_field(a + 2.5 * b, x, y, z);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(vs[k], va[k] + 2.5 * vb[k], 1e-12);
  }
}

TEST(HarmonicProduct, ProductToSum) {
  const GridPtr g = build_grid(16);
  const FlowParams p{};
  ScalarWave c(p, g, 1), s(p, g, 1);
  c.set_cos(1, Profile::from_poly(*g, Polynomial{1.0}));
  s.set_sin(1, Profile::from_poly(*g, Polynomial{1.0}));

  const ScalarWave cc = harmonic_product(c, c);
  EXPECT_EQ(cc.max_harmonic(), 2);
  EXPECT_NEAR(cc.cos(0).values()(3), 0.5, 1e-15);
  EXPECT_NEAR(cc.cos(2).values()(3), 0.5, 1e-15);
  EXPECT_TRUE(cc.sin(2).is_zero());

  const ScalarWave cs = harmonic_product(c, s);
  EXPECT_NEAR(cs.sin(2).values()(5), 0.5, 1e-15);
  EXPECT_TRUE(cs.cos(0).is_zero());
  EXPECT_TRUE(cs.cos(2).is_zero());
}

TEST(HarmonicProduct, OutputReachesSumOfHarmonics) {
  Rng rng(3);
  const FlowParams p{};
  const GridPtr g = build_grid(24);
  const WaveField a = testing::random_field(p, g, rng, 2);
  const WaveField b = testing::random_field(p, g, rng, 3);
  EXPECT_EQ(harmonic_product(a[0], b[1]).max_harmonic(), 5);
}

TEST(HarmonicProduct, MismatchedParamsRejected) {
  const GridPtr g = build_grid(16);
  const ScalarWave a(FlowParams{1, 1, 80}, g, 1);
  const ScalarWave b(FlowParams{2, 1, 80}, g, 1);
  EXPECT_THROW(harmonic_product(a, b), ConfigError);
}

TEST(HarmonicProduct, BilinearAndCommutative) {
  Rng rng(5);
  const FlowParams p{0.8, 1.9, 120};
  const GridPtr g = build_grid(32);
  for (int trial = 0; trial < 10; ++trial) {
    const WaveField f = testing::random_field(p, g, rng);
    const WaveField h = testing::random_field(p, g, rng);
    const ScalarWave lhs = harmonic_product(f[0] * 2.0 + f[1], h[2]);
    const ScalarWave rhs = harmonic_product(f[0], h[2]) * 2.0 + harmonic_product(f[1], h[2]);
    EXPECT_LT(testing::max_diff(lhs, rhs), 1e-12);
    EXPECT_LT(testing::max_diff(harmonic_product(f[0], h[1]), harmonic_product(h[1], f[0])), 1e-14);
  }
}

TEST(HarmonicProduct, PointwiseConsistent) {
  Rng rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const FlowParams& p : testing::kParamTriples) {
    const GridPtr g = build_grid(32);
    int points = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const WaveField f = testing::random_field(p, g, rng);
      const ScalarWave prod = harmonic_product(f[0], f[2]);
      for (int s = 0; s < 12; ++s, ++points) {
        const double x = 6 * u(rng), y = u(rng), z = 6 * u(rng);
        const double want = f[0].eval(x, y, z) * f[2].eval(x, y, z);
        EXPECT_NEAR(prod.eval(x, y, z), want, 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
    EXPECT_GE(points, 100);
  }
}

TEST(ScalarWave, DerivativesOfSingleHarmonic) {
  const GridPtr g = build_grid(24);
  const FlowParams p{2.0, 3.0, 80};
  ScalarWave s(p, g, 1);
  s.set_cos(1, Profile::from_poly(*g, Polynomial{0.0, 0.0, 1.0}));  // y² cos θ
  const double x = 0.2, y = 0.6, z = -0.3, th = 2 * x + 3 * z;
  EXPECT_NEAR(s.ddx().eval(x, y, z), -2 * y * y * std::sin(th), 1e-13);
  EXPECT_NEAR(s.ddz().eval(x, y, z), -3 * y * y * std::sin(th), 1e-13);
  EXPECT_NEAR(s.ddy().eval(x, y, z), 2 * y * std::cos(th), 1e-13);
  EXPECT_NEAR(s.laplacian().eval(x, y, z), (2 - 13 * y * y) * std::cos(th), 1e-12);
}

TEST(WaveField, ResampleKeepsPolynomials) {
  Rng rng(2);
  const FlowParams p{};
  const WaveField f = testing::random_field(p, build_grid(24), rng);
  const WaveField r = f.resampled(build_grid(40)).resampled(build_grid(24));
  EXPECT_LT(testing::max_diff(f, r), 1e-13);
}

}  // namespace
}  // namespace nscompat
