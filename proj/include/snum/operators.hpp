#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snum/ascent.hpp"
#include "snum/exponent.hpp"
#include "snum/spaces.hpp"

namespace snum {

using Matrix = Eigen::MatrixXcd;

/// A linear operator T : l_p^n -> l_q^m given by an m x n matrix.
class LinOp {
 public:
  LinOp(Matrix matrix, SpaceSpec domain, SpaceSpec codomain)
      : matrix_(std::move(matrix)), domain_(domain), codomain_(codomain) {
    if (matrix_.cols() != domain_.n || matrix_.rows() != codomain_.n)
      throw std::domain_error("LinOp: matrix shape " + std::to_string(matrix_.rows()) + "x" +
                              std::to_string(matrix_.cols()) + " does not match spaces (" +
                              std::to_string(codomain_.n) + ", " + std::to_string(domain_.n) + ")");
    if (domain_.field != codomain_.field) throw std::domain_error("LinOp: domain and codomain fields differ");
    if (domain_.field == Field::real && matrix_.imag().cwiseAbs().maxCoeff() != 0.0)
      throw std::domain_error("LinOp: complex entries on a real space");
  }

  LinOp(Matrix matrix, Exponent p, Exponent q, Field field = Field::real)
      : LinOp(matrix, SpaceSpec(p, static_cast<int>(matrix.cols()), field),
              SpaceSpec(q, static_cast<int>(matrix.rows()), field)) {}

  static LinOp identity(int n, Exponent p, Exponent q, Field field = Field::real) {
    return LinOp(Matrix::Identity(n, n), p, q, field);
  }

  static LinOp diagonal(const std::vector<std::complex<double>>& d, Exponent p, Exponent q,
                        Field field = Field::real) {
    const auto n = static_cast<Eigen::Index>(d.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return LinOp(std::move(m), p, q, field);
  }

  const Matrix& matrix() const { return matrix_; }
  const SpaceSpec& domain() const { return domain_; }
  const SpaceSpec& codomain() const { return codomain_; }
  Exponent p() const { return domain_.p; }
  Exponent q() const { return codomain_.p; }
  Field field() const { return domain_.field; }
  int cols() const { return domain_.n; }
  int rows() const { return codomain_.n; }
  bool is_square() const { return rows() == cols(); }
  bool is_hilbert() const { return !p().is_inf() && !q().is_inf() && p().value() == 2.0 && q().value() == 2.0; }
  bool is_identity() const { return is_square() && matrix_ == Matrix::Identity(rows(), cols()); }

  /// Same matrix viewed between other exponents.
  LinOp with_exponents(Exponent p, Exponent q) const { return LinOp(matrix_, p, q, field()); }

 private:
  Matrix matrix_;
  SpaceSpec domain_;
  SpaceSpec codomain_;
};

/// Singular values, descending.
inline Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

enum class NormMethod { identity_formula, column_max, svd, sampled_ascent };

inline const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::identity_formula: return "identity-formula";
    case NormMethod::column_max: return "column-max";
    case NormMethod::svd: return "svd";
    case NormMethod::sampled_ascent: return "sampled-ascent";
  }
  return "?";
}

struct OpNormResult {
  double value = 0.0;
  bool exact = false;
  NormMethod method = NormMethod::sampled_ascent;
};

/// Certified lower bound of ||T|| by sampled ascent, never claimed exact.
inline OpNormResult op_norm_ascent(const LinOp& t, int budget, std::uint64_t seed) {
  const Matrix& a = t.matrix();
  std::vector<Vector> seeds;
  const int n = t.cols();
  for (int j = 0; j < n; ++j) seeds.push_back(Vector::Unit(n, j));
  if (n <= 10) {
    // Sign vectors with first coordinate +1 (+-v give the same ratio).
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      Vector v(n);
      v[0] = 1.0;
      for (int j = 1; j < n; ++j) v[j] = (mask >> (j - 1)) & 1u ? -1.0 : 1.0;
      seeds.push_back(v);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinV);
  if (svd.singularValues().size() > 0) seeds.push_back(svd.matrixV().col(0));
  const Exponent q = t.q();
  auto g = [&](const Vector& x) { return lp_norm(Vector(a * x), q); };
  const AscentResult r = sampled_ascent(g, n, t.p(), t.field(), budget, seed, seeds);
  return {r.value, false, NormMethod::sampled_ascent};
}

/// Operator quasi-norm ||T : l_p^n -> l_q^m||.
///
/// Exact for the identity (n^{max(0,1/q-1/p)}), for p <= 1 <= q (largest column
/// q-norm, the extreme points of the unit ball being the unit vectors) and for
/// p = q = 2 (largest singular value). Otherwise a sampled-ascent lower bound.
inline OpNormResult op_norm(const LinOp& t, int budget = 10000, std::uint64_t seed = 42) {
  if (t.is_identity()) {
    const double e = std::max(0.0, t.q().inverse() - t.p().inverse());
    return {std::pow(static_cast<double>(t.cols()), e), true, NormMethod::identity_formula};
  }
  // Extreme points of B_p are +-e_j when p <= 1; for q < 1 the q-triangle inequality
  // and ||x||_q <= ||x||_p give the same column bound when p <= q.
  const bool p_le_1 = !t.p().is_inf() && t.p().value() <= 1.0;
  const bool q_ge_1 = t.q().is_inf() || t.q().value() >= 1.0;
  if (p_le_1 && (q_ge_1 || t.p() <= t.q())) {
    double best = 0.0;
    for (int j = 0; j < t.cols(); ++j) best = std::max(best, lp_norm(t.matrix().col(j), t.q()));
    return {best, true, NormMethod::column_max};
  }
  if (t.is_hilbert()) {
    const Eigen::VectorXd s = singular_values(t.matrix());
    return {s.size() > 0 ? s[0] : 0.0, true, NormMethod::svd};
  }
  return op_norm_ascent(t, budget, seed);
}

/// Number of singular values above tol * sigma_1.
inline int numerical_rank(const LinOp& t, double tol = 1e-10) {
  if (!(tol > 0.0)) throw std::domain_error("numerical_rank: tol must be positive");
  const Eigen::VectorXd s = singular_values(t.matrix());
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++r;
  return r;
}

inline LinOp add(const LinOp& s, const LinOp& t) {
  if (!(s.domain() == t.domain()) || !(s.codomain() == t.codomain()))
    throw std::domain_error("add: operators act between different spaces");
  return LinOp(s.matrix() + t.matrix(), s.domain(), s.codomain());
}

inline LinOp scale(const LinOp& t, std::complex<double> c) {
  return LinOp(t.matrix() * c, t.domain(), t.codomain());
}

/// S o T, defined when T's codomain is S's domain.
inline LinOp compose(const LinOp& s, const LinOp& t) {
  if (!(t.codomain() == s.domain())) throw std::domain_error("compose: codomain of T is not the domain of S");
  return LinOp(s.matrix() * t.matrix(), t.domain(), s.codomain());
}

/// T^k for square T with domain == codomain.
inline LinOp power(const LinOp& t, int k) {
  if (!(t.domain() == t.codomain())) throw std::domain_error("power: operator is not an endomorphism");
  if (k < 0) throw std::domain_error("power: negative exponent");
  Matrix result = Matrix::Identity(t.rows(), t.cols());
  Matrix base = t.matrix();
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return LinOp(std::move(result), t.domain(), t.codomain());
}

/// Real 2m x 2n representation [[Re, -Im], [Im, Re]] of a complex operator.
inline LinOp realify(const LinOp& t) {
  const Eigen::MatrixXd re = t.matrix().real();
  const Eigen::MatrixXd im = t.matrix().imag();
  const Eigen::Index m = re.rows(), n = re.cols();
  Matrix out = Matrix::Zero(2 * m, 2 * n);
  out.block(0, 0, m, n) = re.cast<std::complex<double>>();
  out.block(0, n, m, n) = (-im).cast<std::complex<double>>();
  out.block(m, 0, m, n) = im.cast<std::complex<double>>();
  out.block(m, n, m, n) = re.cast<std::complex<double>>();
  return LinOp(std::move(out), t.p(), t.q(), Field::real);
}

}  // namespace snum
