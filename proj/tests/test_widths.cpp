#include <cmath>
#include <variant>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snum/widths.hpp"

using namespace snum;

namespace {

const Exponent kInf = Exponent::infinity();

Matrix random_matrix(int m, int n, Rng& rng, Field f = Field::real) {
  Matrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = f == Field::real ? std::complex<double>(gaussian(rng), 0) : std::complex<double>(gaussian(rng), gaussian(rng));
  return a;
}

const WidthEnvelope& env(const EnvelopeResult& r) {
  if (!std::holds_alternative<WidthEnvelope>(r)) throw std::runtime_error(std::get<NoClosedForm>(r).reason);
  return std::get<WidthEnvelope>(r);
}

const std::vector<Exponent> kGrid{0.5, 1.0, 1.5, 2.0, 3.0, kInf};

}  // namespace

TEST(HilbertSNumbers, Examples) {
  for (double v : hilbert_s_numbers(LinOp::identity(4, 2.0, 2.0)).values) EXPECT_EQ(v, 1.0);
  const SNumberSeq d = hilbert_s_numbers(LinOp::diagonal({1.0, 3.0, 2.0}, 2.0, 2.0));
  EXPECT_NEAR(d.at(1), 3.0, 1e-14);
  EXPECT_NEAR(d.at(2), 2.0, 1e-14);
  EXPECT_NEAR(d.at(3), 1.0, 1e-14);
  EXPECT_EQ(d.at(4), 0.0);
  Rng rng = make_rng(1);
  const Matrix u = random_matrix(4, 1, rng), v = random_matrix(1, 4, rng);
  const SNumberSeq r1 = hilbert_s_numbers(LinOp(u * v, 2.0, 2.0));
  EXPECT_NEAR(r1.at(1), u.norm() * v.norm(), 1e-12);
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(r1.at(k), 0.0);
  EXPECT_THROW(hilbert_s_numbers(LinOp::identity(2, 1.0, 2.0)), std::domain_error);
}

TEST(ApproxEnvelope, ExactCase) {
  EXPECT_DOUBLE_EQ(env(approx_id_envelope(2.0, 1.0, 4, 1)).lower, 2.0);
  EXPECT_NEAR(env(approx_id_envelope(2.0, 1.0, 4, 2)).lower, std::sqrt(3.0), 1e-15);
  EXPECT_TRUE(env(approx_id_envelope(2.0, 1.0, 4, 2)).constants_known);
  for (Exponent p : kGrid)
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(env(approx_id_envelope(p, p, 5, k)).lower, 1.0);
  EXPECT_EQ(env(approx_id_envelope(2.0, 1.0, 4, 5)).upper, 0.0);
}

TEST(ApproxEnvelope, FirstIndexIsNorm) {
  for (Exponent p : kGrid)
    for (Exponent q : kGrid) {
      if (p < q) continue;
      for (int n : {1, 3, 8}) {
        const OpNormResult norm = op_norm(LinOp::identity(n, p, q));
        EXPECT_EQ(env(approx_id_envelope(p, q, n, 1)).lower, norm.value);
      }
    }
}

TEST(ApproxEnvelope, NoClosedForm) {
  EXPECT_TRUE(std::holds_alternative<NoClosedForm>(approx_id_envelope(1.0, kInf, 8, 2)));
  EXPECT_TRUE(std::holds_alternative<NoClosedForm>(approx_id_envelope(4.0 / 3.0, 4.0, 8, 2)));
  EXPECT_TRUE(std::holds_alternative<NoClosedForm>(approx_id_envelope(0.5, kInf, 8, 2)));
}

TEST(ApproxEnvelope, CaseDispatch) {
  // 1 <= p < 2 <= q < p': max(n^{1/q-1/p}, min(1, n^{1/q} k^{-1/2}) sqrt(1 - k/n)).
  const WidthEnvelope a = env(approx_id_envelope(1.5, 2.5, 16, 4));
  const double expect = std::max(std::pow(16.0, 1 / 2.5 - 1 / 1.5),
                                 std::min(1.0, std::pow(16.0, 1 / 2.5) / 2.0) * std::sqrt(0.75));
  EXPECT_NEAR(a.lower, expect, 1e-14);
  EXPECT_EQ(a.sidedness, Sidedness::equivalence);
  // q > p': swapped arguments (q', p').
  const WidthEnvelope b = env(approx_id_envelope(1.5, 4.0, 16, 4));
  EXPECT_NE(b.case_label.find("max(p, p')"), std::string::npos);
  // Quasi (i) and (iii).
  EXPECT_EQ(env(approx_id_envelope(0.5, 1.5, 16, 4)).lower, 1.0);
  EXPECT_NEAR(env(approx_id_envelope(0.5, 4.0, 64, 16)).lower, std::min(1.0, std::pow(64.0, 0.25) / 4.0), 1e-15);
  // Beyond k <= n/4 the one-sided Caetano bound remains.
  const WidthEnvelope c = env(approx_id_envelope(0.5, 4.0, 16, 8));
  EXPECT_TRUE(c.sidedness == Sidedness::upper_only || c.sidedness == Sidedness::bracket);
  EXPECT_NEAR(c.upper, 2.0 / std::sqrt(8.0), 1e-15);
}

TEST(ApproxEnvelope, HalfIndexQuasiLower) {
  // a_{n/2} >= 2^{-1/q} n^{1/q-1/p} whenever q <= p.
  for (Exponent p : kGrid)
    for (Exponent q : kGrid) {
      if (p < q) continue;
      for (int n : {2, 4, 10, 64}) {
        EXPECT_GE(env(approx_id_envelope(p, q, n, n / 2)).lower * (1 + 1e-12), approx_half_index_lower(p, q, n));
      }
    }
}

TEST(KolmogorovEnvelope, CaseOneMatchesApprox) {
  for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent(3.0), kInf})
    for (Exponent q : {Exponent(1.0), Exponent(2.0), Exponent(3.0), kInf}) {
      if (p < q) continue;
      for (int k = 1; k <= 6; ++k) {
        const WidthEnvelope d = env(kolmogorov_id_envelope(p, q, 6, k));
        EXPECT_EQ(d.lower, env(approx_id_envelope(p, q, 6, k)).lower);
        EXPECT_TRUE(d.constants_known);
      }
    }
}

TEST(KolmogorovEnvelope, Examples) {
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(env(kolmogorov_id_envelope(2.0, 2.0, 5, k)).lower, 1.0);
  const WidthEnvelope b = env(kolmogorov_id_envelope(2.0, kInf, 8, 2));
  EXPECT_NEAR(b.lower, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b.upper, b.lower * std::pow(std::log(4.0 * std::exp(1.0)), 1.5), 1e-14);
  EXPECT_EQ(b.sidedness, Sidedness::bracket);
  const WidthEnvelope quasi = env(kolmogorov_id_envelope(1.0, 0.5, 8, 3));
  EXPECT_EQ(quasi.sidedness, Sidedness::lower_only);
  EXPECT_NEAR(quasi.lower, 4.0, 1e-14);
  EXPECT_TRUE(std::holds_alternative<NoClosedForm>(kolmogorov_id_envelope(0.5, 2.0, 8, 3)));
}

TEST(KolmogorovEnvelope, NeverAboveApprox) {
  // d <= a wherever both closed forms carry known constants.
  for (Exponent p : kGrid)
    for (Exponent q : kGrid)
      for (int n : {4, 16, 64})
        for (int k = 1; k <= n; k += std::max(1, n / 8)) {
          const EnvelopeResult a = approx_id_envelope(p, q, n, k);
          const EnvelopeResult d = kolmogorov_id_envelope(p, q, n, k);
          if (!std::holds_alternative<WidthEnvelope>(a) || !std::holds_alternative<WidthEnvelope>(d)) continue;
          if (!std::get<WidthEnvelope>(a).constants_known || !std::get<WidthEnvelope>(d).constants_known) continue;
          EXPECT_LE(std::get<WidthEnvelope>(d).lower, std::get<WidthEnvelope>(a).upper * (1 + 1e-12))
              << "p=" << p.to_string() << " q=" << q.to_string() << " n=" << n << " k=" << k;
        }
}

TEST(ApproxSearch, EckartYoung) {
  const LinOp d = LinOp::diagonal({3.0, 2.0, 1.0}, 2.0, 2.0);
  EXPECT_NEAR(approx_upper_search(d, 2).value, 2.0, 1e-12);
  EXPECT_EQ(approx_upper_search(d, 4).value, 0.0);
  EXPECT_EQ(approx_upper_search(LinOp(Matrix::Zero(3, 3), 2.0, 2.0), 1).value, 0.0);
  Rng rng = make_rng(3);
  for (int t = 0; t < 20; ++t) {
    const LinOp a(random_matrix(4, 4, rng), 2.0, 2.0);
    const Eigen::VectorXd s = oracle::singular_values_gram(a.matrix());
    for (int k = 1; k <= 4; ++k) {
      const SearchResult r = approx_upper_search(a, k);
      EXPECT_TRUE(r.certified);
      EXPECT_NEAR(r.value / s[k - 1], 1.0, 1e-9);
    }
  }
}

TEST(ApproxSearch, CertifiedUpperOnColumnMaxCase) {
  // l_1 -> l_1 norms are exact column maxima; a_2(id : l_1^3 -> l_1^3) = 1.
  const SearchResult r = approx_upper_search(LinOp::identity(3, 1.0, 1.0), 2, 4000, 1);
  EXPECT_TRUE(r.certified);
  EXPECT_GE(r.value, 1.0 - 1e-12);
  EXPECT_LE(r.value, 1.0 + 1e-12);
}

TEST(KolmogorovSearch, HilbertValues) {
  const LinOp d = LinOp::diagonal({3.0, 2.0, 1.0}, 2.0, 2.0);
  const KolmogorovSearch s = kolmogorov_upper_search(d, 2);
  EXPECT_NEAR(s.value / 2.0, 1.0, 0.05);
  EXPECT_LE(s.max_disagreement, 1e-6);
  EXPECT_EQ(kolmogorov_upper_search(LinOp::diagonal({1.0, 0.0}, 2.0, 2.0), 2).value, 0.0);
  for (int k = 1; k <= 3; ++k) {
    const double v = kolmogorov_upper_search(LinOp::identity(3, 2.0, 2.0), k, 4000).value;
    EXPECT_GE(v, 1.0 - 1e-9);
    EXPECT_LE(v, 1.0 + 1e-9);
  }
}

TEST(KolmogorovSearch, NonHilbertFirstIndexIsNorm) {
  // d_1 = ||T||; for l_1 -> l_inf the norm is the largest entry.
  const LinOp a = LinOp::diagonal({2.0, 1.0}, 1.0, kInf);
  const KolmogorovSearch s = kolmogorov_upper_search(a, 1, 2000);
  EXPECT_NEAR(s.value, 2.0, 1e-9);
}

TEST(RealComplexBracket, Examples) {
  const LinOp id = LinOp::identity(3, 2.0, 2.0, Field::complex);
  const SNumberSeq ac = hilbert_s_numbers(id), ar = hilbert_s_numbers(realify(id));
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(real_complex_bracket(ar, ac, k));
  const LinOp c = LinOp::diagonal({std::complex<double>(1.5, -2)}, 2.0, 2.0, Field::complex);
  EXPECT_TRUE(real_complex_bracket(hilbert_s_numbers(realify(c)), hilbert_s_numbers(c), 1));
  EXPECT_THROW(real_complex_bracket(ar, ac, 4), std::domain_error);
  Rng rng = make_rng(8);
  for (int t = 0; t < 30; ++t) {
    const LinOp a(random_matrix(3, 3, rng, Field::complex), 2.0, 2.0, Field::complex);
    const SNumberSeq sc = hilbert_s_numbers(a), sr = hilbert_s_numbers(realify(a));
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(real_complex_bracket(sr, sc, k));
  }
  // A fake sequence that breaks the bracket is caught.
  SNumberSeq bad = ac;
  bad.values[0] = 5.0;
  EXPECT_FALSE(real_complex_bracket(ar, bad, 1));
}

TEST(Axioms, ExactHilbertPasses) {
  const AxiomReport r = s_axiom_suite(exact_hilbert_source(), 100, 42);
  EXPECT_TRUE(r.ok()) << r.violations.size() << " violations";
  EXPECT_GT(r.checks, 1000);
}

TEST(Axioms, ComplexHilbertPasses) {
  AxiomOptions opt;
  opt.field = Field::complex;
  EXPECT_TRUE(s_axiom_suite(exact_hilbert_source(), 30, 5, opt).ok());
}

TEST(Axioms, BrokenSourceIsCaught) {
  // Doubling every value breaks the norming and monotonicity axioms.
  const SSource doubled = [](const LinOp& t) {
    SNumberSeq s = hilbert_s_numbers(t);
    for (double& v : s.values) v *= 2.0;
    return SBounds{s.values, s.values, 0.0};
  };
  const AxiomReport r = s_axiom_suite(doubled, 5, 1);
  EXPECT_FALSE(r.ok());
  bool norming = false;
  for (const auto& v : r.violations) norming = norming || v.axiom == Axiom::norming;
  EXPECT_TRUE(norming);
}
