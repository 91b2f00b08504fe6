#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snum/random.hpp"
#include "snum/spaces.hpp"

using namespace snum;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vector random_real(int n, Rng& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = gaussian(rng);
  return v;
}

const std::vector<Exponent> kGrid{0.3, 0.5, 0.8, 1.0, 2.0, Exponent::infinity()};

}  // namespace

TEST(Exponent, RejectsNonPositive) {
  EXPECT_THROW(Exponent(0.0), std::domain_error);
  EXPECT_THROW(Exponent(-1.0), std::domain_error);
  EXPECT_THROW(Exponent(std::nan("")), std::domain_error);
}

TEST(Exponent, ParsesTokens) {
  EXPECT_TRUE(parse_exponent("inf").is_inf());
  EXPECT_TRUE(parse_exponent("Infinity").is_inf());
  EXPECT_DOUBLE_EQ(parse_exponent("0.5").value(), 0.5);
  EXPECT_THROW(parse_exponent("abc"), std::invalid_argument);
  EXPECT_THROW(parse_exponent("1.5x"), std::invalid_argument);
  EXPECT_EQ(Exponent::infinity().inverse(), 0.0);
  EXPECT_EQ(Exponent::infinity().to_string(), "inf");
}

TEST(SpaceSpec, VolumetricDimension) {
  EXPECT_EQ(SpaceSpec(2.0, 3, Field::real).volumetric_dim(), 3);
  EXPECT_EQ(SpaceSpec(2.0, 3, Field::complex).volumetric_dim(), 6);
  EXPECT_THROW(SpaceSpec(2.0, 0, Field::real), std::domain_error);
}

TEST(LpNorm, Examples) {
  EXPECT_DOUBLE_EQ(lp_norm(vec({3, 4}), 2.0), 5.0);
  EXPECT_NEAR(lp_norm(vec({1, 1}), 0.5), 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(lp_norm(vec({1, -2, 2}), Exponent::infinity()), 2.0);
  EXPECT_EQ(lp_norm(Vector::Zero(3), 0.5), 0.0);
  EXPECT_THROW(lp_norm(Vector(), 2.0), std::domain_error);
}

TEST(LpNorm, ComplexModulus) {
  Vector v(2);
  v << std::complex<double>(3, 4), 0.0;
  EXPECT_DOUBLE_EQ(lp_norm(v, 1.0), 5.0);
}

TEST(LpNorm, HomogeneityProperty) {
  Rng rng = make_rng(7);
  for (Exponent p : kGrid) {
    for (int t = 0; t < 200; ++t) {
      const Vector x = random_real(1 + t % 6, rng);
      const double lambda = 5.0 * gaussian(rng);
      const double lhs = lp_norm(Vector(lambda * x), p);
      const double rhs = std::abs(lambda) * lp_norm(x, p);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs));
    }
  }
}

TEST(LpNorm, QuasiTriangleProperty) {
  Rng rng = make_rng(11);
  for (Exponent p : kGrid) {
    const double c = quasi_constant(p);
    for (int t = 0; t < 10000; ++t) {
      const int n = 1 + t % 5;
      const Vector x = random_real(n, rng), y = random_real(n, rng);
      ASSERT_LE(lp_norm(Vector(x + y), p), c * (lp_norm(x, p) + lp_norm(y, p)) * (1 + 1e-12));
    }
  }
}

TEST(LpNorm, PNormPropertyBelowOne) {
  Rng rng = make_rng(13);
  for (double pv : {0.3, 0.5, 0.8}) {
    for (int t = 0; t < 2000; ++t) {
      const Vector x = random_real(4, rng), y = random_real(4, rng);
      const double lhs = std::pow(lp_norm(Vector(x + y), pv), pv);
      const double rhs = std::pow(lp_norm(x, pv), pv) + std::pow(lp_norm(y, pv), pv);
      ASSERT_LE(lhs, rhs * (1 + 1e-12));
    }
  }
}

TEST(QuasiConstant, ValuesAndBruteForce) {
  EXPECT_EQ(quasi_constant(2.0), 1.0);
  EXPECT_EQ(quasi_constant(1.0), 1.0);
  EXPECT_EQ(quasi_constant(Exponent::infinity()), 1.0);
  EXPECT_DOUBLE_EQ(quasi_constant(0.5), 2.0);
  for (double p : {0.3, 0.5, 0.8}) {
    const double brute = oracle::brute_quasi_constant(p, 20000, 3);
    EXPECT_LE(brute, quasi_constant(p) * (1 + 1e-12));
    EXPECT_NEAR(brute, quasi_constant(p), 1e-9);  // attained at e_1, e_2
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho_exponent(1.0), 1.0);
  EXPECT_NEAR(rho_exponent(2.0), 0.5, 1e-15);
  EXPECT_NEAR(rho_exponent(4.0), std::log(2.0) / std::log(8.0), 1e-15);
  EXPECT_THROW(rho_exponent(0.5), std::domain_error);
}

TEST(Aoki, Errors) {
  EXPECT_THROW(aoki_norm(vec({1, 1}), 0.5, 0, 4, 1), std::domain_error);
  EXPECT_THROW(aoki_norm(vec({1, 1}), 1.0, 2, 4, 1), std::domain_error);
  EXPECT_THROW(aoki_norm(vec({1, 1}), 2.0, 2, 4, 1), std::domain_error);
}

TEST(Aoki, Examples) {
  const double v = aoki_norm(vec({1, 1}), 0.5, 3, 16, 42);
  EXPECT_GE(v, 0.25);
  EXPECT_LE(v, 4.0);
  EXPECT_NEAR(aoki_norm(vec({1, 0}), 0.5, 3, 16, 42), 1.0, 1e-12);
}

TEST(Aoki, SingleCoordinateExhaustive) {
  // Two-part splits e_1 = t e_1 + (1 - t) e_1 on a fine grid never beat the trivial value.
  const double rho = rho_of(0.5);
  for (int i = -400; i <= 800; ++i) {
    const double t = i / 400.0;
    const double v = std::pow(std::pow(std::abs(t), rho) + std::pow(std::abs(1 - t), rho), 1 / rho);
    EXPECT_GE(v, 1.0 - 1e-12);
  }
}

TEST(Aoki, PoolMustSum) {
  const Vector x = vec({1, 2});
  std::vector<Decomposition> pool{{vec({1, 0}), vec({0, 1})}};
  EXPECT_THROW(aoki_decompose(x, 0.5, {}, pool), std::domain_error);
}

TEST(DistToSubspace, Examples) {
  std::vector<Vector> u{vec({0, 1})};
  EXPECT_NEAR(dist_to_subspace(vec({1, 0}), u, 2.0).value, 1.0, 1e-15);
  std::vector<Vector> diag{vec({1, 1})};
  EXPECT_NEAR(dist_to_subspace(vec({1, 1}), diag, 2.0).value, 0.0, 1e-14);
  EXPECT_NEAR(dist_to_subspace(vec({1, 0}), diag, 2.0).value, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(dist_to_subspace(vec({3, 4}), {}, 2.0).value, 5.0, 1e-15);
  EXPECT_THROW(dist_to_subspace(vec({1, 0, 0}), u, 2.0), std::domain_error);
}

TEST(DistToSubspace, NonEuclideanExact) {
  // dist_1((1,0), span{(1,1)}) = min_t |1 - t| + |t| = 1; dist_inf = min_t max(|1-t|,|t|) = 1/2.
  std::vector<Vector> diag{vec({1, 1})};
  EXPECT_NEAR(dist_to_subspace(vec({1, 0}), diag, 1.0).value, 1.0, 1e-6);
  EXPECT_NEAR(dist_to_subspace(vec({1, 0}), diag, Exponent::infinity()).value, 0.5, 1e-6);
  // q = 1/2: min_t (|1-t|^{1/2} + |t|^{1/2})^2 is attained at t in {0, 1}: value 1.
  EXPECT_NEAR(dist_to_subspace(vec({1, 0}), diag, 0.5).value, 1.0, 1e-9);
}

TEST(DistToSubspace, MembershipAndBound) {
  Rng rng = make_rng(5);
  for (Exponent q : kGrid) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Vector> basis{random_real(4, rng), random_real(4, rng)};
      const Vector inside = 0.7 * basis[0] - 1.3 * basis[1];
      EXPECT_LE(dist_to_subspace(inside, basis, q, 2000, t).value, 1e-6 * lp_norm(inside, q));
      const Vector x = random_real(4, rng);
      EXPECT_LE(dist_to_subspace(x, basis, q, 2000, t).value, lp_norm(x, q) * (1 + 1e-12));
    }
  }
}

TEST(DistToSubspace, QuotientBallProperty) {
  Rng rng = make_rng(17);
  for (Exponent p : kGrid) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Vector> basis{random_real(3, rng)};
      Vector x = random_real(3, rng);
      x *= uniform01(rng) * 0.999 / lp_norm(x, p);
      EXPECT_LT(dist_to_subspace(x, basis, p, 1000, t).value, 1.0);
    }
  }
}

TEST(BallVolume, Examples) {
  EXPECT_NEAR(ball_volume(SpaceSpec(2.0, 1, Field::complex)), std::numbers::pi, 1e-12);
  EXPECT_NEAR(ball_volume(SpaceSpec(Exponent::infinity(), 3, Field::real)), 8.0, 1e-12);
  EXPECT_NEAR(ball_volume(SpaceSpec(1.0, 2, Field::real)), 2.0, 1e-12);
  EXPECT_NEAR(ball_volume(SpaceSpec(2.0, 2, Field::real)), std::numbers::pi, 1e-12);
  EXPECT_NEAR(ball_volume(SpaceSpec(Exponent::infinity(), 2, Field::complex)), std::numbers::pi * std::numbers::pi,
              1e-12);
}

TEST(BallVolume, QuadratureOracle) {
  for (double p : {0.3, 0.5, 1.0, 1.5, 2.0, 4.0}) {
    for (int n = 1; n <= 5; ++n) {
      const double exact = ball_volume(SpaceSpec(p, n, Field::real));
      EXPECT_NEAR(oracle::quad_ball_volume(p, n) / exact, 1.0, 1e-6) << "p=" << p << " n=" << n;
    }
  }
}

TEST(BallVolume, MonteCarloOracle) {
  // Hit-or-miss in the cube; tolerance is five binomial standard errors.
  const int samples = 400000;
  for (double p : {0.5, 1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
    for (int n = 1; n <= 4; ++n) {
      const double mc = oracle::mc_ball_volume(p, n, samples, 99 + n);
      const Exponent e = std::isinf(p) ? Exponent::infinity() : Exponent(p);
      const double exact = ball_volume(SpaceSpec(e, n, Field::real));
      const double f = exact / std::pow(2.0, n);
      const double rel_se = std::sqrt((1.0 - f) / (f * samples));
      EXPECT_NEAR(mc / exact, 1.0, 5.0 * rel_se + 1e-12) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Sampling, SphereAndBallStayInside) {
  Rng rng = make_rng(3);
  for (Exponent p : kGrid) {
    for (Field f : {Field::real, Field::complex}) {
      for (int t = 0; t < 200; ++t) {
        EXPECT_NEAR(lp_norm(sample_sphere(p, 4, f, rng), p), 1.0, 1e-12);
        EXPECT_LE(lp_norm(sample_ball(p, 4, f, rng), p), 1.0 + 1e-12);
      }
    }
  }
}
