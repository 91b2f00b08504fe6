#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "snum/operators.hpp"
#include "snum/random.hpp"
#include "snum/spaces.hpp"

namespace snum {

enum class BoundMethod { none, packing, volumetric, sign_vectors, hamming, greedy_cover, norm_bound };

inline const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::none: return "none";
    case BoundMethod::packing: return "packing";
    case BoundMethod::volumetric: return "volumetric";
    case BoundMethod::sign_vectors: return "sign-vectors";
    case BoundMethod::hamming: return "hamming";
    case BoundMethod::greedy_cover: return "greedy-cover";
    case BoundMethod::norm_bound: return "norm-bound";
  }
  return "?";
}

/// Bracket for one entropy number e_k. `upper` is empty when unknown.
/// `margin` is the discretization margin of a sample-relative upper bound.
struct BoundPair {
  int k = 1;
  double lower = 0.0;
  std::optional<double> upper;
  BoundMethod method_lower = BoundMethod::none;
  BoundMethod method_upper = BoundMethod::none;
  bool certified_lower = false;
  bool certified_upper = false;
  double margin = 0.0;
};

/// Quasi-metric of l_q^m on realified coordinates (complex entries stored as pairs).
class Metric {
 public:
  Metric(Exponent q, Field field) : field_(field) {
    if (q.is_inf()) {
      kind_ = Kind::inf;
    } else if (q.value() == 1.0) {
      kind_ = Kind::one;
    } else if (q.value() == 2.0) {
      kind_ = Kind::two;
    } else {
      kind_ = Kind::general;
      e_ = q.value();
    }
  }

  /// Monotone surrogate of the distance (q-th power for finite q).
  double raw(const double* a, const double* b, int dim) const {
    double acc = 0.0;
    if (field_ == Field::real) {
      for (int i = 0; i < dim; ++i) acc = combine(acc, std::abs(a[i] - b[i]));
    } else {
      for (int i = 0; i + 1 < dim; i += 2) acc = combine(acc, std::hypot(a[i] - b[i], a[i + 1] - b[i + 1]));
    }
    return acc;
  }

  double finish(double raw) const {
    switch (kind_) {
      case Kind::inf:
      case Kind::one: return raw;
      case Kind::two: return std::sqrt(raw);
      case Kind::general: return std::pow(raw, 1.0 / e_);
    }
    return raw;
  }

  double distance(const double* a, const double* b, int dim) const { return finish(raw(a, b, dim)); }

 private:
  enum class Kind { inf, one, two, general };

  double combine(double acc, double t) const {
    switch (kind_) {
      case Kind::inf: return std::max(acc, t);
      case Kind::one: return acc + t;
      case Kind::two: return acc + t * t;
      case Kind::general: return acc + std::pow(t, e_);
    }
    return acc;
  }

  Kind kind_ = Kind::two;
  double e_ = 2.0;
  Field field_;
};

namespace detail {

inline Eigen::VectorXd realify_vector(const Vector& y, Field field) {
  if (field == Field::real) return y.real();
  Eigen::VectorXd out(2 * y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    out[2 * i] = y[i].real();
    out[2 * i + 1] = y[i].imag();
  }
  return out;
}

/// Points of the unit ball with a special role: +-e_j (and +-i e_j over C), and the
/// cube vertices for p = inf over R when there are at most `max_vertices` of them.
inline std::vector<Vector> extreme_points(const SpaceSpec& dom, int max_vertices) {
  std::vector<Vector> pts;
  const int n = dom.n;
  for (int j = 0; j < n; ++j) {
    pts.push_back(Vector::Unit(n, j));
    pts.push_back(-Vector::Unit(n, j));
    if (dom.field == Field::complex) {
      pts.push_back(std::complex<double>(0.0, 1.0) * Vector::Unit(n, j));
      pts.push_back(std::complex<double>(0.0, -1.0) * Vector::Unit(n, j));
    }
  }
  if (dom.p.is_inf() && dom.field == Field::real && n < 30 && (1LL << n) <= max_vertices) {
    for (long long mask = 0; mask < (1LL << n); ++mask) {
      Vector v(n);
      for (int j = 0; j < n; ++j) v[j] = (mask >> j) & 1 ? -1.0 : 1.0;
      pts.push_back(v);
    }
  }
  return pts;
}

/// Minimizer of the max distance to `members`: exact midrange for l_inf over R,
/// otherwise Badoiu-Clarkson style iterations toward the farthest member.
inline Eigen::VectorXd minimax_center(const Eigen::MatrixXd& pts, const std::vector<int>& members,
                                      const Metric& metric, bool real_inf) {
  const int dim = static_cast<int>(pts.rows());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  if (members.empty()) return c;
  if (real_inf) {
    Eigen::VectorXd lo = pts.col(members[0]), hi = lo;
    for (int i : members) {
      lo = lo.cwiseMin(pts.col(i));
      hi = hi.cwiseMax(pts.col(i));
    }
    return 0.5 * (lo + hi);
  }
  for (int i : members) c += pts.col(i);
  c /= static_cast<double>(members.size());
  Eigen::VectorXd best = c;
  double best_r = std::numeric_limits<double>::infinity();
  for (int t = 1; t <= 24; ++t) {
    double far = -1.0;
    int far_i = members[0];
    for (int i : members) {
      const double d = metric.raw(pts.col(i).data(), c.data(), dim);
      if (d > far) {
        far = d;
        far_i = i;
      }
    }
    if (far < best_r) {
      best_r = far;
      best = c;
    }
    c += (pts.col(far_i) - c) / (t + 1.0);
  }
  return best;
}

}  // namespace detail

struct CoverResult {
  double radius = 0.0;          // max distance from a cloud point to its nearest center
  Eigen::MatrixXd centers;      // realified centers, one per column
};

/// A finite sample of T(closed unit ball of X), stored in realified coordinates.
class ImageCloud {
 public:
  ImageCloud(const LinOp& t, int size, std::uint64_t seed)
      : metric_(t.q(), t.field()), field_(t.field()) {
    if (size < 1) throw std::domain_error("ImageCloud: size must be >= 1");
    const int m = t.rows();
    dim_ = t.field() == Field::real ? m : 2 * m;
    std::vector<Vector> pre = detail::extreme_points(t.domain(), size / 4);
    Rng rng = make_rng(seed, 0xC10D);
    const int n = t.cols();
    while (static_cast<int>(pre.size()) < size) {
      // Alternate boundary and interior points.
      pre.push_back(pre.size() % 2 == 0 ? sample_sphere(t.p(), n, t.field(), rng)
                                        : sample_ball(t.p(), n, t.field(), rng));
    }
    pre.resize(static_cast<std::size_t>(size));
    pts_.resize(dim_, size);
    for (int i = 0; i < size; ++i) pts_.col(i) = detail::realify_vector(t.matrix() * pre[static_cast<std::size_t>(i)], field_);
  }

  int size() const { return static_cast<int>(pts_.cols()); }
  int dim() const { return dim_; }
  const Eigen::MatrixXd& points() const { return pts_; }
  const Metric& metric() const { return metric_; }

  /// Discretization margin: the largest nearest-neighbour distance in the cloud.
  double margin() const {
    if (margin_) return *margin_;
    const int n = size();
    std::vector<double> nn(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double d = metric_.raw(pts_.col(i).data(), pts_.col(j).data(), dim_);
        nn[static_cast<std::size_t>(i)] = std::min(nn[static_cast<std::size_t>(i)], d);
        nn[static_cast<std::size_t>(j)] = std::min(nn[static_cast<std::size_t>(j)], d);
      }
    }
    double worst = 0.0;
    for (double d : nn)
      if (std::isfinite(d)) worst = std::max(worst, d);
    margin_ = metric_.finish(worst);
    return *margin_;
  }

  /// Greedy k-center with `centers` centers, refined by alternating assignment and
  /// minimax re-centering. Trial 0 seeds at an approximate Chebyshev center of a
  /// subsample; other trials seed at random cloud points. The smallest radius wins.
  CoverResult cover(int centers, int trials = 6, std::uint64_t seed = 42) const {
    if (centers < 1) throw std::domain_error("cover: need at least one center");
    const int n = size();
    CoverResult best;
    best.radius = std::numeric_limits<double>::infinity();
    const bool real_inf = field_ == Field::real && is_inf_metric();
    for (int trial = 0; trial < std::max(1, trials); ++trial) {
      Rng rng = make_rng(seed, 0xC0E0 + static_cast<std::uint64_t>(trial));
      int first = 0;
      if (trial == 0) {
        first = chebyshev_seed();
      } else {
        first = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      }
      std::vector<double> mind(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
      std::vector<int> chosen;
      int next = first;
      while (static_cast<int>(chosen.size()) < centers) {
        chosen.push_back(next);
        double far = -1.0;
        int far_i = 0;
        for (int i = 0; i < n; ++i) {
          const double d = metric_.raw(pts_.col(i).data(), pts_.col(next).data(), dim_);
          auto& slot = mind[static_cast<std::size_t>(i)];
          if (d < slot) slot = d;
          if (slot > far) {
            far = slot;
            far_i = i;
          }
        }
        if (far <= 0.0) break;
        next = far_i;
      }
      Eigen::MatrixXd c(dim_, static_cast<Eigen::Index>(chosen.size()));
      for (std::size_t j = 0; j < chosen.size(); ++j) c.col(static_cast<Eigen::Index>(j)) = pts_.col(chosen[j]);
      double radius = *std::max_element(mind.begin(), mind.end());
      refine(c, radius, real_inf);
      const double r = metric_.finish(radius);
      if (r < best.radius) {
        best.radius = r;
        best.centers = c;
      }
    }
    return best;
  }

 private:
  bool is_inf_metric() const {
    const double a[2] = {0.0, 0.0};
    const double b[2] = {1.0, 1.0};
    return metric_.raw(a, b, 2) == 1.0;
  }

  int chebyshev_seed() const {
    const int n = size();
    const int sub = std::min(n, 256);
    const int stride = std::max(1, n / sub);
    std::vector<int> sample;
    for (int i = 0; i < n && static_cast<int>(sample.size()) < sub; i += stride) sample.push_back(i);
    int best_i = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i : sample) {
      double worst = 0.0;
      for (int j : sample) worst = std::max(worst, metric_.raw(pts_.col(i).data(), pts_.col(j).data(), dim_));
      if (worst < best) {
        best = worst;
        best_i = i;
      }
    }
    return best_i;
  }

  /// Lloyd-style minimax refinement; keeps the centers only while the radius drops.
  void refine(Eigen::MatrixXd& centers, double& radius, bool real_inf) const {
    const int n = size();
    const auto k = centers.cols();
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (int it = 0; it < 20 && radius > 0.0; ++it) {
      std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
      for (int i = 0; i < n; ++i) {
        double bd = std::numeric_limits<double>::infinity();
        int bj = 0;
        for (Eigen::Index j = 0; j < k; ++j) {
          const double d = metric_.raw(pts_.col(i).data(), centers.col(j).data(), dim_);
          if (d < bd) {
            bd = d;
            bj = static_cast<int>(j);
          }
        }
        members[static_cast<std::size_t>(bj)].push_back(i);
      }
      Eigen::MatrixXd moved = centers;
      for (Eigen::Index j = 0; j < k; ++j)
        if (!members[static_cast<std::size_t>(j)].empty())
          moved.col(j) = detail::minimax_center(pts_, members[static_cast<std::size_t>(j)], metric_, real_inf);
      double r = 0.0;
      for (int i = 0; i < n; ++i) {
        double bd = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < k; ++j)
          bd = std::min(bd, metric_.raw(pts_.col(i).data(), moved.col(j).data(), dim_));
        r = std::max(r, bd);
      }
      if (!(r < radius * (1.0 - 1e-12))) break;
      radius = r;
      centers = std::move(moved);
    }
  }

  Eigen::MatrixXd pts_;
  Metric metric_;
  Field field_;
  int dim_ = 0;
  mutable std::optional<double> margin_;
};

inline std::int64_t dyadic_count(int k) {
  if (k < 1) throw std::domain_error("entropy index k must be >= 1");
  if (k > 62) throw std::domain_error("entropy index k too large");
  return std::int64_t{1} << (k - 1);
}

/// Sample-relative upper estimate of e_k(T): covering radius of `cloud` points of
/// T(B_X) by 2^{k-1} centers. Never certified; `margin` reports the cloud's gap.
inline BoundPair entropy_upper_cover(const LinOp& t, int k, int cloud, std::uint64_t seed = 42) {
  const auto centers = dyadic_count(k);
  if (cloud < centers) throw std::domain_error("entropy_upper_cover: cloud must hold at least 2^{k-1} points");
  const ImageCloud image(t, cloud, seed);
  BoundPair b;
  b.k = k;
  b.upper = image.cover(static_cast<int>(centers), 6, seed).radius;
  b.method_upper = BoundMethod::greedy_cover;
  b.margin = image.margin();
  return b;
}

/// Upper estimates for k = 1..k_max from one cloud, made nonincreasing in k.
inline std::vector<BoundPair> entropy_upper_sequence(const ImageCloud& image, int k_max, std::uint64_t seed = 42) {
  std::vector<BoundPair> out;
  const double margin = image.margin();
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= k_max; ++k) {
    const auto centers = dyadic_count(k);
    if (centers > image.size()) throw std::domain_error("entropy_upper_sequence: cloud smaller than 2^{k-1}");
    BoundPair b;
    b.k = k;
    prev = std::min(prev, image.cover(static_cast<int>(centers), 6, seed).radius);
    b.upper = prev;
    b.method_upper = BoundMethod::greedy_cover;
    b.margin = margin;
    out.push_back(b);
  }
  return out;
}

namespace detail {

/// Converts a separation s of more than 2^{k-1} points into a lower bound for e_k.
inline double separation_to_radius(double s, Exponent q) {
  const double qbar = q.is_inf() ? 1.0 : std::min(1.0, q.value());
  return s / std::pow(2.0, 1.0 / qbar);
}

/// Farthest-point traversal; returns the exact minimum pairwise distance among the
/// first K traversed points for every K = 2..limit (index K).
inline std::vector<double> traversal_separations(const Eigen::MatrixXd& pts, const Metric& metric, int limit,
                                                 int start) {
  const int n = static_cast<int>(pts.cols());
  const int dim = static_cast<int>(pts.rows());
  limit = std::min(limit, n);
  std::vector<double> sep(static_cast<std::size_t>(std::max(limit + 1, 2)), 0.0);
  if (n < 2) return sep;
  std::vector<double> mind(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
  std::vector<int> chosen{start};
  double pair_min = std::numeric_limits<double>::infinity();
  int current = start;
  while (static_cast<int>(chosen.size()) < limit) {
    double far = -1.0;
    int far_i = -1;
    for (int i = 0; i < n; ++i) {
      const double d = metric.raw(pts.col(i).data(), pts.col(current).data(), dim);
      auto& slot = mind[static_cast<std::size_t>(i)];
      if (d < slot) slot = d;
      if (slot > far) {
        far = slot;
        far_i = i;
      }
    }
    if (far_i < 0) break;
    for (int c : chosen) pair_min = std::min(pair_min, metric.raw(pts.col(far_i).data(), pts.col(c).data(), dim));
    chosen.push_back(far_i);
    current = far_i;
    sep[chosen.size()] = metric.finish(pair_min);
  }
  return sep;
}

}  // namespace detail

/// Certified lower bounds e_1..e_{k_max} from packings of image points.
///
/// Two packings are tried: the images of the sign vectors +-e_j alone, and a
/// farthest-point traversal of those together with `budget` sampled image points.
/// K > 2^{k-1} points with pairwise separation s give e_k >= s/2 (q >= 1) or
/// s / 2^{1/q} (q < 1).
inline std::vector<BoundPair> entropy_lower_pack_sequence(const LinOp& t, int k_max, int budget = 10000,
                                                          std::uint64_t seed = 42) {
  dyadic_count(k_max);
  const Metric metric(t.q(), t.field());
  const auto signs = detail::extreme_points(SpaceSpec(t.p(), t.cols(), t.field()), 0);
  const int dim = t.field() == Field::real ? t.rows() : 2 * t.rows();
  Eigen::MatrixXd sign_pts(dim, static_cast<Eigen::Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i)
    sign_pts.col(static_cast<Eigen::Index>(i)) = detail::realify_vector(t.matrix() * signs[i], t.field());
  const ImageCloud cloud(t, std::max(budget, static_cast<int>(signs.size())), seed ^ 0x5EEDULL);
  const Eigen::MatrixXd& pool = cloud.points();

  const int limit = static_cast<int>(dyadic_count(k_max)) + 1;
  const std::vector<double> from_signs = detail::traversal_separations(sign_pts, metric, limit, 0);
  int start = 0;
  double biggest = -1.0;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index i = 0; i < pool.cols(); ++i) {
    const double r = metric.raw(pool.col(i).data(), zero.data(), dim);
    if (r > biggest) {
      biggest = r;
      start = static_cast<int>(i);
    }
  }
  const std::vector<double> from_pool = detail::traversal_separations(pool, metric, limit, start);

  std::vector<BoundPair> out;
  for (int k = 1; k <= k_max; ++k) {
    const auto need = static_cast<std::size_t>(dyadic_count(k) + 1);
    const double s_signs = need < from_signs.size() ? from_signs[need] : 0.0;
    const double s_pool = need < from_pool.size() ? from_pool[need] : 0.0;
    BoundPair b;
    b.k = k;
    b.certified_lower = true;
    if (s_signs >= s_pool && s_signs > 0.0) {
      b.lower = detail::separation_to_radius(s_signs, t.q());
      b.method_lower = BoundMethod::sign_vectors;
    } else if (s_pool > 0.0) {
      b.lower = detail::separation_to_radius(s_pool, t.q());
      b.method_lower = BoundMethod::packing;
    }
    if (!out.empty()) b.lower = std::min(b.lower, out.back().lower);
    out.push_back(b);
  }
  return out;
}

inline BoundPair entropy_lower_pack(const LinOp& t, int k, int budget = 10000, std::uint64_t seed = 42) {
  return entropy_lower_pack_sequence(t, k, budget, seed).back();
}

/// Volumetric lower bound for e_k(id : l_p^n -> l_q^n):
///   (vol B_p / (2^{k-1} vol B_q))^{1/D},  D = n (real) or 2n (complex).
inline double entropy_lower_volumetric(Exponent p, Exponent q, int n, int k, Field field = Field::real) {
  dyadic_count(k);
  const SpaceSpec from(p, n, field), to(q, n, field);
  const int dim = from.volumetric_dim();
  const double log_ratio = std::log(ball_volume(from)) - (k - 1) * std::log(2.0) - std::log(ball_volume(to));
  return std::exp(log_ratio / dim);
}

/// Volumetric bound for a square operator, using vol T(B_p) = |det_R T| vol B_p.
inline double entropy_lower_volumetric(const LinOp& t, int k) {
  if (!t.is_square()) throw std::domain_error("entropy_lower_volumetric: operator must be square");
  const double det = std::abs(t.matrix().determinant());
  if (det == 0.0) return 0.0;
  const int n = t.cols();
  const int dim = t.field() == Field::real ? n : 2 * n;
  const double log_det = (t.field() == Field::real ? 1.0 : 2.0) * std::log(det);
  return std::exp(log_det / dim) * entropy_lower_volumetric(t.p(), t.q(), n, k, t.field());
}

/// Lower bound from one sign-vector packing size m: points (2m)^{-1/p} x, x in
/// {-1,0,1}^n with 2m nonzeros, more than a = C(n,2m)/C(n,m) of them pairwise at
/// Hamming distance > m, hence l_q-separated by eps = (2m)^{-1/p} m^{1/q}.
struct HammingBound {
  double value = 0.0;       // certified lower bound for e_k (0 if no admissible m)
  int m = 0;                // packing parameter attaining `value`
  double log2_count = 0.0;  // log2 a for that m
  std::string diagnostic;
};

inline double log2_binomial(int n, int r) {
  return (std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0)) / std::log(2.0);
}

/// eps/2 (q >= 1) or eps/2^{1/q} (q < 1) for a given m; does not check admissibility.
inline double hamming_bound_for_m(Exponent p, Exponent q, int m) {
  const double eps = std::pow(2.0 * m, -p.inverse()) * std::pow(static_cast<double>(m), q.inverse());
  return detail::separation_to_radius(eps, q);
}

inline HammingBound hamming_pack_lower(Exponent p, Exponent q, int n, int k) {
  HammingBound out;
  if (p > q) throw std::domain_error("hamming_pack_lower: requires p <= q");
  if (n < 4) {
    out.diagnostic = "n < 4: no admissible packing";
    return out;
  }
  for (int m = 1; 4 * m <= n; ++m) {
    const double log2a = log2_binomial(n, 2 * m) - log2_binomial(n, m);
    if (log2a < k) continue;
    const double v = hamming_bound_for_m(p, q, m);
    if (v > out.value) {
      out.value = v;
      out.m = m;
      out.log2_count = log2a;
    }
  }
  if (out.m == 0) out.diagnostic = "no m <= n/4 with log2(C(n,2m)/C(n,m)) >= k";
  return out;
}

enum class Regime { small_k, mid_k, large_k };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::small_k: return "small-k";
    case Regime::mid_k: return "mid-k";
    case Regime::large_k: return "large-k";
  }
  return "?";
}

/// Shape of e_k(id : l_p^n -> l_q^n) up to unknown constants.
struct Envelope {
  double value = 0.0;
  Regime regime = Regime::small_k;
  bool constants_known = false;
};

/// One piece of the three-regime equivalence, evaluated at any k.
/// `big` is 2n over C and n over R.
inline double regime_piece(Regime piece, Exponent p, Exponent q, int n, double k, Field field = Field::real) {
  const double big = field == Field::complex ? 2.0 * n : static_cast<double>(n);
  const double e = p.inverse() - q.inverse();
  switch (piece) {
    case Regime::small_k: return 1.0;
    case Regime::mid_k: return std::pow(std::log2(1.0 + big / k) / k, e);
    case Regime::large_k: return std::exp2(-k / big) * std::pow(big, -e);
  }
  return 0.0;
}

inline Regime regime_of(int n, int k, Field field) {
  const double big = field == Field::complex ? 2.0 * n : static_cast<double>(n);
  if (k < std::log2(big)) return Regime::small_k;
  if (k <= big) return Regime::mid_k;
  return Regime::large_k;
}

inline Envelope regime_envelope(Exponent p, Exponent q, int n, int k, Field field = Field::real) {
  if (p > q) throw std::domain_error("regime_envelope: requires p <= q");
  if (n < 1 || k < 1) throw std::domain_error("regime_envelope: requires n >= 1, k >= 1");
  const Regime r = regime_of(n, k, field);
  return {regime_piece(r, p, q, n, k, field), r, false};
}

/// Shapes c 2^{-(k-1)/m'} and C ||T|| 2^{-(k-1)/m'} with c = C = 1, m' = m (R) or 2m (C).
inline std::pair<double, double> rank_decay_bounds(int m, int k, double norm, Field field = Field::real) {
  if (m < 1 || k < 1) throw std::domain_error("rank_decay_bounds: requires m >= 1, k >= 1");
  const double div = field == Field::complex ? 2.0 * m : static_cast<double>(m);
  const double shape = std::exp2(-(k - 1) / div);
  return {shape, norm * shape};
}

/// e_lambda for fractional lambda >= 1 is read as e_{ceil(lambda)}.
inline int fractional_index(double lambda) {
  if (!(lambda >= 1.0)) throw std::domain_error("fractional_index: lambda must be >= 1");
  return static_cast<int>(std::ceil(lambda));
}

/// Options for the merged bracket of e_1..e_{k_max}.
struct EntropyOptions {
  int cloud = 4000;
  int pack_budget = 4000;
  std::uint64_t seed = 42;
};

/// Best certified lower bound (packing, volumetric, norm bound at k = 1) and the
/// sample-relative cover upper estimate, for k = 1..k_max.
inline std::vector<BoundPair> entropy_bounds(const LinOp& t, int k_max, const EntropyOptions& opt = {}) {
  std::vector<BoundPair> lows = entropy_lower_pack_sequence(t, k_max, opt.pack_budget, opt.seed);
  const int cloud = std::max<int>(opt.cloud, static_cast<int>(dyadic_count(k_max)));
  const ImageCloud image(t, cloud, opt.seed);
  std::vector<BoundPair> ups = entropy_upper_sequence(image, k_max, opt.seed);
  const OpNormResult norm = op_norm(t, 2000, opt.seed);
  const double cq = quasi_constant(t.q());
  std::vector<BoundPair> out;
  for (int k = 1; k <= k_max; ++k) {
    BoundPair b = lows[static_cast<std::size_t>(k - 1)];
    if (t.is_square()) {
      const double v = entropy_lower_volumetric(t, k);
      if (v > b.lower) {
        b.lower = v;
        b.method_lower = BoundMethod::volumetric;
      }
    }
    // ||T|| <= C_Y e_1 and e_k <= e_1.
    if (norm.value / cq > b.lower && k == 1) {
      b.lower = norm.value / cq;
      b.method_lower = BoundMethod::norm_bound;
    }
    if (k > 1) b.lower = std::min(b.lower, out.back().lower);
    b.certified_lower = true;
    const BoundPair& u = ups[static_cast<std::size_t>(k - 1)];
    b.upper = u.upper;
    b.margin = u.margin;
    b.method_upper = BoundMethod::greedy_cover;
    if (norm.exact && norm.value < *b.upper) {
      b.upper = norm.value;
      b.method_upper = BoundMethod::norm_bound;
      b.certified_upper = true;
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace snum
