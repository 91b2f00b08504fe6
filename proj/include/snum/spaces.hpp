#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "snum/exponent.hpp"
#include "snum/random.hpp"

namespace snum {

using Vector = Eigen::VectorXcd;
using Decomposition = std::vector<Vector>;

inline double rho_of(Exponent p) { return rho_exponent(quasi_constant(p)); }

/// (sum ||f_i||_p^rho)^{1/rho} for a decomposition f = f_1 + ... + f_m.
inline double decomposition_value(const Decomposition& parts, Exponent p) {
  const double rho = rho_of(p);
  double sum = 0.0;
  for (const auto& f : parts) sum += std::pow(lp_norm(f, p), rho);
  return std::pow(sum, 1.0 / rho);
}

struct AokiOptions {
  int depth = 3;    // maximal number of parts in a searched decomposition
  int trials = 16;  // random signed splits tried per part and per round
  std::uint64_t seed = 42;
};

struct AokiResult {
  double value = 0.0;
  double rho = 1.0;
  Decomposition parts;  // the decomposition attaining `value`
};

namespace detail {

inline double rho_power(const Vector& f, Exponent p, double rho) { return std::pow(lp_norm(f, p), rho); }

inline bool sums_to(const Decomposition& parts, const Vector& x) {
  if (parts.empty()) return false;
  Vector s = Vector::Zero(x.size());
  for (const auto& f : parts) {
    if (f.size() != x.size()) return false;
    s += f;
  }
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  return (s - x).cwiseAbs().maxCoeff() <= 1e-9 * scale;
}

}  // namespace detail

/// Upper approximation of the Aoki-Rolewicz rho-norm
///   ||x||_0 = inf { (sum ||f_i||^rho)^{1/rho} : x = f_1 + ... + f_m }
/// over a bounded search: the trivial decomposition, coordinate bipartitions,
/// and random signed splits, refined greedily up to `depth` parts. Extra candidate
/// decompositions (each must sum to x) join the pool; pass the concatenated best
/// decompositions of x and y when evaluating x + y to obtain rho-subadditivity.
inline AokiResult aoki_decompose(const Vector& x, Exponent p, const AokiOptions& opt = {},
                                 std::span<const Decomposition> pool = {}) {
  if (opt.depth < 1) throw std::domain_error("aoki_norm: depth must be >= 1");
  if (opt.trials < 1) throw std::domain_error("aoki_norm: trials must be >= 1");
  if (p.is_inf() || p.value() >= 1.0) throw std::domain_error("aoki_norm: requires 0 < p < 1");
  if (x.size() == 0) throw std::domain_error("aoki_norm: empty vector");

  const double rho = rho_of(p);
  Rng rng = make_rng(opt.seed, 0xA0C1);

  Decomposition parts{x};
  std::vector<double> powers{detail::rho_power(x, p, rho)};
  auto total = [&] {
    double s = 0.0;
    for (double v : powers) s += v;
    return s;
  };

  const int n = static_cast<int>(x.size());
  while (static_cast<int>(parts.size()) < opt.depth) {
    double best_gain = 0.0;
    std::size_t best_index = 0;
    Vector best_u;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Vector& f = parts[i];
      const double base = powers[i];
      auto consider = [&](const Vector& u) {
        const double gain = base - detail::rho_power(u, p, rho) - detail::rho_power(f - u, p, rho);
        if (gain > best_gain) {
          best_gain = gain;
          best_index = i;
          best_u = u;
        }
      };
      std::vector<int> support;
      for (int j = 0; j < n; ++j)
        if (f[j] != 0.0) support.push_back(j);
      const int s = static_cast<int>(support.size());
      if (s >= 2 && s <= 12) {
        // All nontrivial bipartitions of the support (mask and complement counted once).
        for (std::uint32_t mask = 1; mask < (1u << (s - 1)); ++mask) {
          Vector u = Vector::Zero(n);
          for (int b = 0; b < s; ++b)
            if (mask & (1u << b)) u[support[b]] = f[support[b]];
          consider(u);
        }
      } else if (s > 12) {
        for (int t = 0; t < opt.trials; ++t) {
          Vector u = Vector::Zero(n);
          for (int j : support)
            if (uniform01(rng) < 0.5) u[j] = f[j];
          consider(u);
        }
      }
      for (int t = 0; t < opt.trials; ++t) {
        Vector u(n);
        for (int j = 0; j < n; ++j) {
          const double w = uniform01(rng) * 3.0 - 1.0;  // weight in [-1, 2]
          u[j] = f[j] * w;
        }
        consider(u);
      }
    }
    if (best_gain <= 1e-12 * total()) break;
    Vector rest = parts[best_index] - best_u;
    parts[best_index] = best_u;
    powers[best_index] = detail::rho_power(best_u, p, rho);
    parts.push_back(rest);
    powers.push_back(detail::rho_power(rest, p, rho));
  }

  AokiResult result{std::pow(total(), 1.0 / rho), rho, parts};
  for (const auto& candidate : pool) {
    if (!detail::sums_to(candidate, x))
      throw std::domain_error("aoki_norm: pooled decomposition does not sum to x");
    const double v = decomposition_value(candidate, p);
    if (v < result.value) {
      result.value = v;
      result.parts = candidate;
    }
  }
  // The trivial decomposition is always admissible.
  const double trivial = lp_norm(x, p);
  if (trivial <= result.value) {
    result.value = trivial;
    result.parts = Decomposition{x};
  }
  return result;
}

inline double aoki_norm(const Vector& x, Exponent p, int depth, int trials, std::uint64_t seed) {
  return aoki_decompose(x, p, AokiOptions{depth, trials, seed}).value;
}

enum class DistMethod { projection, convex_search, vertex_enumeration, multistart_upper };

struct DistResult {
  double value = 0.0;
  DistMethod method = DistMethod::projection;
  bool exact = false;  // true only for orthogonal projection (q = 2)
};

namespace detail {

/// Orthonormal basis (columns) of span(basis); numerically dependent vectors are dropped.
inline Eigen::MatrixXcd orthonormal_span(std::span<const Vector> basis, Eigen::Index n) {
  if (basis.empty()) return Eigen::MatrixXcd(n, 0);
  Eigen::MatrixXcd b(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != n) throw std::domain_error("dist_to_subspace: dimension mismatch");
    b.col(static_cast<Eigen::Index>(j)) = basis[j];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(b);
  qr.setThreshold(1e-12);
  const Eigen::Index r = qr.rank();
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, r);
  return q;
}

inline bool is_real(const Eigen::MatrixXcd& m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }
inline bool is_real(const Vector& v) { return v.size() == 0 || v.imag().cwiseAbs().maxCoeff() == 0.0; }

/// Derivative-free descent of c -> ||x - Q c||_q over real or complex coefficients.
inline double pattern_descent(const Vector& x, const Eigen::MatrixXcd& q, Exponent qexp, Vector& c,
                              bool complex_coeffs, int& evals, int budget, Rng& rng) {
  const Eigen::Index r = q.cols();
  auto f = [&](const Vector& coeffs) {
    ++evals;
    return lp_norm(x - q * coeffs, qexp);
  };
  double best = f(c);
  double step = std::max(best, 1e-300);
  const double floor = 1e-13 * std::max(best, 1e-300);
  const int dims = static_cast<int>(complex_coeffs ? 2 * r : r);
  while (evals < budget && step > floor) {
    bool improved = false;
    for (int d = 0; d < dims + 2 && evals < budget; ++d) {
      Vector dir = Vector::Zero(r);
      if (d < dims) {
        dir[d % r] = d < r ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
      } else {
        for (Eigen::Index j = 0; j < r; ++j)
          dir[j] = complex_coeffs ? std::complex<double>(gaussian(rng), gaussian(rng))
                                  : std::complex<double>(gaussian(rng), 0.0);
        dir /= dir.norm();
      }
      for (double sgn : {1.0, -1.0}) {
        Vector trial = c + sgn * step * dir;
        const double v = f(trial);
        if (v < best) {
          best = v;
          c = trial;
          improved = true;
          break;
        }
      }
    }
    step *= improved ? 1.5 : 0.5;
  }
  return best;
}

}  // namespace detail

/// Distance from x to span(basis) in l_q, i.e. the quotient norm of [x] in l_q / U.
///
/// q = 2 is exact (orthogonal projection). q >= 1 runs a convex descent to
/// tolerance. For q <= 1 over real data, the candidates where dim U residual
/// coordinates vanish are enumerated (the minimum of the concave objective sits
/// at such a point); for q < 1 the result is an upper approximation of the infimum.
inline DistResult dist_to_subspace(const Vector& x, std::span<const Vector> basis, Exponent q,
                                   int budget = 4000, std::uint64_t seed = 42) {
  if (x.size() == 0) throw std::domain_error("dist_to_subspace: empty vector");
  const Eigen::Index n = x.size();
  const Eigen::MatrixXcd qmat = detail::orthonormal_span(basis, n);
  const Eigen::Index r = qmat.cols();
  const double plain = lp_norm(x, q);
  if (r == 0) return {plain, DistMethod::projection, true};

  const Vector ls = qmat.adjoint() * x;
  if (!q.is_inf() && q.value() == 2.0) {
    return {lp_norm(x - qmat * ls, q), DistMethod::projection, true};
  }

  const bool real_data = detail::is_real(qmat) && detail::is_real(x);
  const bool complex_coeffs = !real_data;
  Rng rng = make_rng(seed, 0xD157);
  int evals = 0;
  std::vector<Vector> starts{Vector::Zero(r), ls};

  DistMethod method = DistMethod::convex_search;
  const bool quasi = !q.is_inf() && q.value() < 1.0;
  if (!q.is_inf() && q.value() <= 1.0 && real_data) {
    // Enumerate index sets S with |S| = r where Q_S is invertible: c = Q_S^{-1} x_S.
    method = DistMethod::vertex_enumeration;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (Eigen::Index j = 0; j < r; ++j) idx[static_cast<std::size_t>(j)] = static_cast<int>(j);
    const int enum_budget = std::max(1, budget / 2);
    int enumerated = 0;
    while (true) {
      Eigen::MatrixXcd qs(r, r);
      Vector xs(r);
      for (Eigen::Index a = 0; a < r; ++a) {
        qs.row(a) = qmat.row(idx[static_cast<std::size_t>(a)]);
        xs[a] = x[idx[static_cast<std::size_t>(a)]];
      }
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(qs);
      if (lu.isInvertible()) starts.push_back(lu.solve(xs));
      if (++enumerated >= enum_budget) break;
      // next combination
      Eigen::Index i = r - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(n - r + i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (Eigen::Index j = i + 1; j < r; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (quasi) method = DistMethod::multistart_upper;
  } else if (quasi) {
    method = DistMethod::multistart_upper;
    for (int t = 0; t < 8; ++t) {
      Vector c(r);
      for (Eigen::Index j = 0; j < r; ++j)
        c[j] = ls[j] * (uniform01(rng) * 2.0) +
               (complex_coeffs ? std::complex<double>(0.0, gaussian(rng) * 0.1) : 0.0);
      starts.push_back(c);
    }
  }

  // Rank starts, then polish the most promising ones.
  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(starts.size());
  for (std::size_t s = 0; s < starts.size(); ++s) {
    ranked.emplace_back(lp_norm(x - qmat * starts[s], q), s);
    ++evals;
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  double best = std::min(plain, ranked.front().first);
  const std::size_t polish = std::min<std::size_t>(ranked.size(), quasi ? 4 : 2);
  const int polish_budget = std::max(200, budget - evals);
  for (std::size_t s = 0; s < polish; ++s) {
    Vector c = starts[ranked[s].second];
    int local = 0;
    const double v = detail::pattern_descent(x, qmat, q, c, complex_coeffs, local,
                                             static_cast<int>(polish_budget / polish), rng);
    evals += local;
    best = std::min(best, v);
  }
  return {best, method, false};
}

/// Volume of the closed unit ball of l_p^n.
///
/// Complex field: pi^n Gamma(1+2/p)^n / Gamma(1+2n/p) (pi^n for p = inf).
/// Real field:    2^n Gamma(1+1/p)^n / Gamma(1+n/p)   (2^n for p = inf).
inline double ball_volume(const SpaceSpec& space) {
  const double n = space.n;
  const double ip = space.p.inverse();
  if (space.field == Field::complex) {
    if (space.p.is_inf()) return std::pow(std::numbers::pi, n);
    return std::exp(n * std::log(std::numbers::pi) + n * std::lgamma(1.0 + 2.0 * ip) -
                    std::lgamma(1.0 + 2.0 * n * ip));
  }
  if (space.p.is_inf()) return std::pow(2.0, n);
  return std::exp(n * std::log(2.0) + n * std::lgamma(1.0 + ip) - std::lgamma(1.0 + n * ip));
}

}  // namespace snum
