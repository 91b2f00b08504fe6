#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "snum/entropy.hpp"
#include "snum/operators.hpp"

namespace snum {

/// |lambda_1| >= |lambda_2| >= ... with algebraic multiplicity; length = dimension.
struct EigenSeq {
  Eigen::VectorXd moduli;
  bool padded = false;  // some entries are zeros standing for an exhausted spectrum

  double at(int k) const { return k >= 1 && k <= moduli.size() ? moduli[k - 1] : 0.0; }
};

inline EigenSeq eigen_sequence(const LinOp& t) {
  if (!t.is_square()) throw std::domain_error("eigen_sequence: operator must be square");
  EigenSeq out;
  const int n = t.rows();
  Eigen::ComplexEigenSolver<Matrix> solver(t.matrix(), false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen_sequence: eigensolver failed");
  out.moduli = solver.eigenvalues().cwiseAbs();
  std::sort(out.moduli.data(), out.moduli.data() + n, std::greater<>());
  for (int i = 0; i < n; ++i) {
    if (out.moduli[i] == 0.0) out.padded = true;
  }
  return out;
}

struct SpectralViolation {
  std::string check;
  int k = 0;
  double p = 0.0;  // exponent of a p-sum check, 0 otherwise
  double lhs = 0.0;
  double rhs = 0.0;
};

struct WeylReport {
  int checks = 0;
  std::vector<SpectralViolation> violations;
  double det_rel_error = 0.0;  // max of | prod|lambda| - |det| | and | prod sigma - |det| |, relative
  bool ok() const { return violations.empty(); }
};

/// prod_{i<=k} |lambda_i| <= prod_{i<=k} sigma_i and sum_{i<=k} |lambda_i|^p <= sum sigma_i^p
/// for every k, plus equality of both full products with |det T|. `flip` reverses the
/// inequalities so the harness can be shown to catch a broken check.
inline WeylReport weyl_check(const LinOp& t, const std::vector<double>& p_grid, double tol = 1e-9, bool flip = false) {
  const EigenSeq lam = eigen_sequence(t);
  const Eigen::VectorXd sig = singular_values(t.matrix());
  const int n = t.rows();
  WeylReport rep;
  auto check = [&](const std::string& name, int k, double p, double lhs, double rhs) {
    ++rep.checks;
    const bool bad = flip ? rhs > lhs * (1.0 + tol) + 1e-300 : lhs > rhs * (1.0 + tol) + 1e-300;
    if (bad) rep.violations.push_back({name, k, p, lhs, rhs});
  };
  double prod_l = 1.0, prod_s = 1.0;
  for (int k = 1; k <= n; ++k) {
    prod_l *= lam.moduli[k - 1];
    prod_s *= sig[k - 1];
    check("product", k, 0.0, prod_l, prod_s);
  }
  for (double p : p_grid) {
    double sum_l = 0.0, sum_s = 0.0;
    for (int k = 1; k <= n; ++k) {
      sum_l += std::pow(lam.moduli[k - 1], p);
      sum_s += std::pow(sig[k - 1], p);
      check("p-sum", k, p, sum_l, sum_s);
    }
  }
  const double det = std::abs(t.matrix().determinant());
  const double denom = std::max(det, std::numeric_limits<double>::min());
  rep.det_rel_error = std::max(std::abs(prod_l - det), std::abs(prod_s - det)) / denom;
  if (det == 0.0) rep.det_rel_error = std::max(prod_l, prod_s) <= 1e-12 * std::pow(std::max(sig[0], 1.0), n) ? 0.0 : 1.0;
  ++rep.checks;
  if (rep.det_rel_error > tol) rep.violations.push_back({"determinant", n, 0.0, prod_l, det});
  return rep;
}

struct CarlReport {
  int checks = 0;
  std::vector<SpectralViolation> violations;
  double min_margin = std::numeric_limits<double>::infinity();  // smallest rhs - lhs
  bool ok() const { return violations.empty(); }
};

/// Geometric-mean inequality (prod_{m<=k} |lambda_m|)^{1/k} <= min_j 2^{j/2k} e_j and the
/// corollary |lambda_k| <= sqrt(2) e_k, with upper estimates e_j given as
/// `entropy_uppers[j-1]` (margins already included).
inline CarlReport carl_check(const LinOp& t, const std::vector<double>& entropy_uppers, int k_max, double tol = 1e-9) {
  const EigenSeq lam = eigen_sequence(t);
  CarlReport rep;
  auto check = [&](const std::string& name, int k, double lhs, double rhs) {
    ++rep.checks;
    rep.min_margin = std::min(rep.min_margin, rhs - lhs);
    if (lhs > rhs * (1.0 + tol) + 1e-300) rep.violations.push_back({name, k, 0.0, lhs, rhs});
  };
  double log_prod = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double lk = lam.at(k);
    log_prod += lk > 0.0 ? std::log(lk) : -std::numeric_limits<double>::infinity();
    const double gmean = std::exp(log_prod / k);
    double rhs = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < entropy_uppers.size(); ++j)
      rhs = std::min(rhs, std::exp2((j + 1.0) / (2.0 * k)) * entropy_uppers[j]);
    if (std::isfinite(rhs)) check("geometric-mean", k, gmean, rhs);
    if (k <= static_cast<int>(entropy_uppers.size()))
      check("corollary", k, lk, std::sqrt(2.0) * entropy_uppers[static_cast<std::size_t>(k - 1)]);
  }
  return rep;
}

struct HilbertBracketReport {
  double g = 0.0;  // max_k 2^{-n/k} (sigma_1 ... sigma_k)^{1/k}
  double lower = 0.0;
  std::optional<double> upper;
  double margin = 0.0;
  bool upper_ok = true;  // g <= upper + margin
  bool lower_ok = true;  // lower <= 14 g
  bool ok() const { return upper_ok && lower_ok; }
};

inline double hilbert_entropy_functional(const Eigen::VectorXd& sigma, int rank, int n) {
  double g = 0.0, log_prod = 0.0;
  for (int k = 1; k <= rank; ++k) {
    log_prod += std::log(sigma[k - 1]);
    g = std::max(g, std::exp(-n * std::log(2.0) / k + log_prod / k));
  }
  return g;
}

inline HilbertBracketReport hilbert_entropy_bracket(const LinOp& t, int n, const BoundPair& bounds, double tol = 1e-9) {
  if (!t.is_hilbert()) throw std::domain_error("hilbert_entropy_bracket: requires p = q = 2");
  HilbertBracketReport rep;
  rep.g = hilbert_entropy_functional(singular_values(t.matrix()), numerical_rank(t), n);
  rep.lower = bounds.lower;
  rep.upper = bounds.upper;
  rep.margin = bounds.margin;
  if (bounds.upper) rep.upper_ok = rep.g <= (*bounds.upper + bounds.margin) * (1.0 + tol);
  rep.lower_ok = rep.lower <= 14.0 * rep.g * (1.0 + tol);
  return rep;
}

namespace detail {

/// log ||A^k||_2, with rescaling so that large powers neither overflow nor underflow.
inline double log_norm_power(const Matrix& a, int k) {
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  double log_result = 0.0;
  Matrix base = a;
  double log_base = 0.0;
  auto renorm = [](Matrix& m, double& log_scale) {
    const double c = m.cwiseAbs().maxCoeff();
    if (c == 0.0) return false;
    m /= c;
    log_scale += std::log(c);
    return true;
  };
  if (!renorm(base, log_base)) return -std::numeric_limits<double>::infinity();
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) {
      result = result * base;
      log_result += log_base;
      if (!renorm(result, log_result)) return -std::numeric_limits<double>::infinity();
    }
    if (e > 1) {
      base = base * base;
      log_base *= 2.0;
      if (!renorm(base, log_base)) {
        // base^2 vanished; any further use of it gives zero
        if ((e >> 1) > 0) return -std::numeric_limits<double>::infinity();
      }
    }
  }
  const Eigen::VectorXd s = singular_values(result);
  if (s.size() == 0 || s[0] == 0.0) return -std::numeric_limits<double>::infinity();
  return log_result + std::log(s[0]);
}

inline void next_combination_init(std::vector<int>& c, int r) {
  c.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
}

inline bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - r + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// r-th compound matrix: all r x r minors, rows and columns in lexicographic order.
inline Matrix compound_matrix(const Matrix& a, int r) {
  const int n = static_cast<int>(a.rows());
  if (!(a.rows() == a.cols())) throw std::domain_error("compound_matrix: square input required");
  if (r < 0 || r > n) throw std::domain_error("compound_matrix: order out of range");
  if (r == 0) return Matrix::Identity(1, 1);
  std::vector<std::vector<int>> subsets;
  std::vector<int> c;
  detail::next_combination_init(c, r);
  do subsets.push_back(c);
  while (detail::next_combination(c, n));
  const auto size = static_cast<Eigen::Index>(subsets.size());
  Matrix out(size, size);
  Matrix minor(r, r);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      for (int a_i = 0; a_i < r; ++a_i)
        for (int b_j = 0; b_j < r; ++b_j)
          minor(a_i, b_j) = a(subsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(a_i)],
                              subsets[static_cast<std::size_t>(j)][static_cast<std::size_t>(b_j)]);
      out(i, j) = minor.determinant();
    }
  }
  return out;
}

/// sigma_n(T^k)^{1/k}, computed as (||(C_n T)^k|| / ||(C_{n-1} T)^k||)^{1/k} with C_r the
/// r-th compound matrix, which keeps small singular values of large powers accurate.
inline double power_singular_root(const LinOp& t, int n, int k) {
  if (!t.is_square()) throw std::domain_error("power_singular_root: operator must be square");
  if (n < 1 || n > t.rows() || k < 1) throw std::domain_error("power_singular_root: index out of range");
  const double top = detail::log_norm_power(compound_matrix(t.matrix(), n), k);
  const double below = n == 1 ? 0.0 : detail::log_norm_power(compound_matrix(t.matrix(), n - 1), k);
  if (!std::isfinite(top)) return 0.0;
  return std::exp((top - below) / k);
}

struct RadiusStep {
  int power = 0;
  double value = 0.0;
};

struct SpectralRadiusReport {
  double value = 0.0;               // ||T^m||^{1/m} at m = max_power
  std::vector<RadiusStep> schedule; // m = 1, 2, 4, ... and max_power
};

inline SpectralRadiusReport spectral_radius(const LinOp& t, int max_power) {
  if (!t.is_square()) throw std::domain_error("spectral_radius: operator must be square");
  if (max_power < 1) throw std::domain_error("spectral_radius: max_power must be >= 1");
  SpectralRadiusReport rep;
  auto at = [&](int m) {
    const double l = detail::log_norm_power(t.matrix(), m);
    return std::isfinite(l) ? std::exp(l / m) : 0.0;
  };
  for (int m = 1; m < max_power; m *= 2) rep.schedule.push_back({m, at(m)});
  rep.value = at(max_power);
  rep.schedule.push_back({max_power, rep.value});
  return rep;
}

struct KoenigRow {
  int power = 0;
  double value = 0.0;  // sigma_n(T^k)^{1/k}
};

struct KoenigReport {
  int index = 0;
  double eigen_modulus = 0.0;  // |lambda_n|
  std::vector<KoenigRow> rows;
  double final_rel_error = 0.0;
  std::vector<std::pair<double, double>> fitted_kp;  // (p, smallest K_p for this instance)
  bool kp_finite = true;
};

/// Convergence of sigma_n(T^k)^{1/k} to |lambda_n| along `k_schedule`, and the fitted
/// constant K_p = sum |lambda|^p / sum sigma^p for each p (reported, not asserted).
inline KoenigReport koenig_limit_check(const LinOp& t, int n, const std::vector<int>& k_schedule,
                                       const std::vector<double>& p_grid = {0.5, 1.0, 2.0}) {
  KoenigReport rep;
  rep.index = n;
  const EigenSeq lam = eigen_sequence(t);
  rep.eigen_modulus = lam.at(n);
  for (int k : k_schedule) rep.rows.push_back({k, power_singular_root(t, n, k)});
  if (!rep.rows.empty()) {
    const double last = rep.rows.back().value;
    rep.final_rel_error = rep.eigen_modulus > 0.0 ? std::abs(last - rep.eigen_modulus) / rep.eigen_modulus : last;
  }
  const Eigen::VectorXd sig = singular_values(t.matrix());
  for (double p : p_grid) {
    double sl = 0.0, ss = 0.0;
    for (int i = 0; i < lam.moduli.size(); ++i) {
      sl += std::pow(lam.moduli[i], p);
      ss += std::pow(sig[i], p);
    }
    const double kp = ss > 0.0 ? sl / ss : 0.0;
    rep.fitted_kp.emplace_back(p, kp);
    if (!std::isfinite(kp)) rep.kp_finite = false;
  }
  return rep;
}

}  // namespace snum
