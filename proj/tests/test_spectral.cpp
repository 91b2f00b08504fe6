#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snum/spectral.hpp"

using namespace snum;

namespace {

Matrix random_matrix(int n, Rng& rng, Field f) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = f == Field::real ? std::complex<double>(gaussian(rng), 0) : std::complex<double>(gaussian(rng), gaussian(rng));
  return a;
}

LinOp mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return LinOp(m, 2.0, 2.0);
}

const std::vector<double> kPGrid{0.5, 1.0, 2.0, 4.0};

}  // namespace

TEST(EigenSequence, Examples) {
  const LinOp d = LinOp::diagonal({1.0, -2.0, std::complex<double>(0, 3)}, 2.0, 2.0, Field::complex);
  const EigenSeq e = eigen_sequence(d);
  EXPECT_NEAR(e.at(1), 3.0, 1e-14);
  EXPECT_NEAR(e.at(2), 2.0, 1e-14);
  EXPECT_NEAR(e.at(3), 1.0, 1e-14);
  const EigenSeq nil = eigen_sequence(mat2(0, 1, 0, 0));
  EXPECT_EQ(nil.at(1), 0.0);
  EXPECT_EQ(nil.at(2), 0.0);
  EXPECT_TRUE(nil.padded);
  const EigenSeq j = eigen_sequence(mat2(1, 1, 0, 1));
  EXPECT_NEAR(j.at(1), 1.0, 1e-14);
  EXPECT_NEAR(j.at(2), 1.0, 1e-14);
  EXPECT_THROW(eigen_sequence(LinOp(Matrix::Zero(2, 3), 2.0, 2.0)), std::domain_error);
}

TEST(Weyl, Examples) {
  const WeylReport a = weyl_check(LinOp::diagonal({2.0, 1.0}, 2.0, 2.0), kPGrid);
  EXPECT_TRUE(a.ok());
  EXPECT_LE(a.det_rel_error, 1e-12);
  const WeylReport j = weyl_check(mat2(1, 1, 0, 1), kPGrid);
  EXPECT_TRUE(j.ok());
  EXPECT_LE(j.det_rel_error, 1e-12);
  // sigma_1 of [[1,1],[0,1]] is the golden ratio.
  EXPECT_NEAR(singular_values(mat2(1, 1, 0, 1).matrix())[0], (1 + std::sqrt(5.0)) / 2, 1e-14);
}

TEST(Weyl, RandomSweep) {
  for (int seed = 0; seed < 200; ++seed) {
    Rng rng = make_rng(static_cast<std::uint64_t>(seed));
    const Field f = seed % 2 ? Field::complex : Field::real;
    const LinOp t(random_matrix(1 + seed % 8, rng, f), 2.0, 2.0, f);
    const WeylReport r = weyl_check(t, kPGrid);
    ASSERT_TRUE(r.ok()) << "seed " << seed << ": " << r.violations.front().check;
  }
}

TEST(Weyl, FlippedCheckReports) {
  const WeylReport r = weyl_check(mat2(1, 1, 0, 1), kPGrid, 1e-9, true);
  EXPECT_FALSE(r.ok());
}

TEST(Carl, Examples) {
  EXPECT_TRUE(carl_check(LinOp::identity(3, 2.0, 2.0), {1.0}, 3).ok());
  EXPECT_TRUE(carl_check(LinOp(Matrix::Zero(2, 2), 2.0, 2.0), {0.0, 0.0}, 2).ok());
  // diag(c, c) with the cover estimate of the disc of radius |c|.
  const LinOp t = LinOp::diagonal({0.6, 0.6}, 2.0, 2.0);
  const ImageCloud cloud(t, 3000, 1);
  const auto up = entropy_upper_sequence(cloud, 4);
  std::vector<double> e;
  for (const auto& b : up) e.push_back(*b.upper + b.margin);
  const CarlReport r = carl_check(t, e, 2);
  EXPECT_TRUE(r.ok());
  // Estimates that are too small are caught.
  EXPECT_FALSE(carl_check(t, {0.1, 0.1}, 2).ok());
}

TEST(HilbertBracket, Examples) {
  const LinOp id = LinOp::identity(2, 2.0, 2.0);
  BoundPair b;
  b.k = 1;
  b.upper = 1.0;
  const HilbertBracketReport r = hilbert_entropy_bracket(id, 1, b);
  EXPECT_NEAR(r.g, std::pow(2.0, -0.5), 1e-15);
  EXPECT_TRUE(r.ok());
  const HilbertBracketReport z = hilbert_entropy_bracket(LinOp(Matrix::Zero(2, 2), 2.0, 2.0), 1, BoundPair{1, 0.0, 0.0});
  EXPECT_EQ(z.g, 0.0);
  EXPECT_TRUE(z.ok());
  const HilbertBracketReport d = hilbert_entropy_bracket(LinOp::diagonal({4.0, 1.0}, 2.0, 2.0), 2, BoundPair{2});
  EXPECT_NEAR(d.g, 1.0, 1e-15);
}

TEST(SpectralRadius, Examples) {
  const LinOp d = LinOp::diagonal({3.0, 2.0, 1.0}, 2.0, 2.0);
  const SpectralRadiusReport r = spectral_radius(d, 16);
  for (const auto& s : r.schedule) EXPECT_NEAR(s.value, 3.0, 1e-12);
  const SpectralRadiusReport nil = spectral_radius(mat2(0, 1, 0, 0), 2);
  EXPECT_EQ(nil.value, 0.0);
  // ||J^m||^{1/m} for the Jordan block approaches 1 like m^{1/m}.
  const SpectralRadiusReport j = spectral_radius(mat2(1, 1, 0, 1), 64);
  EXPECT_NEAR(j.value, std::pow(singular_values(mat2(1, 64, 0, 1).matrix())[0], 1.0 / 64), 1e-12);
  EXPECT_GT(j.value, 1.0);
  for (std::size_t i = 1; i < j.schedule.size(); ++i) EXPECT_LE(j.schedule[i].value, j.schedule[i - 1].value + 1e-12);
  EXPECT_THROW(spectral_radius(LinOp(Matrix::Zero(2, 3), 2.0, 2.0), 4), std::domain_error);
}

TEST(SpectralRadius, AboveTopModulus) {
  Rng rng = make_rng(4);
  for (int t = 0; t < 20; ++t) {
    const LinOp a(random_matrix(4, rng, Field::real), 2.0, 2.0);
    const double lam = eigen_sequence(a).at(1);
    const SpectralRadiusReport r = spectral_radius(a, 256);
    EXPECT_GE(r.value, lam * (1 - 1e-9));
    EXPECT_NEAR(r.value / lam, 1.0, 0.05);
  }
}

TEST(Compound, MinorsAndSingularProducts) {
  Rng rng = make_rng(6);
  const Matrix a = random_matrix(4, rng, Field::real);
  const Eigen::VectorXd s = oracle::singular_values_gram(a);
  for (int r = 1; r <= 4; ++r) {
    const Matrix c = compound_matrix(a, r);
    double prod = 1.0;
    for (int i = 0; i < r; ++i) prod *= s[i];
    EXPECT_NEAR(singular_values(c)[0] / prod, 1.0, 1e-10);
  }
  EXPECT_NEAR(std::abs(compound_matrix(a, 4)(0, 0) - a.determinant()), 0.0, 1e-10);
}

TEST(Koenig, Examples) {
  const LinOp d = LinOp::diagonal({3.0, 2.0, 1.0}, 2.0, 2.0);
  const KoenigReport r = koenig_limit_check(d, 2, {1, 2, 7, 64});
  for (const auto& row : r.rows) EXPECT_NEAR(row.value, 2.0, 1e-12);
  const LinOp t = mat2(2, 1, 0, 1);
  EXPECT_NEAR(koenig_limit_check(t, 1, {64}).rows.back().value, 2.0, 0.04);
  EXPECT_NEAR(koenig_limit_check(t, 2, {64}).rows.back().value, 1.0, 0.02);
  EXPECT_TRUE(r.kp_finite);
}
