#pragma once

#include <algorithm>
#include <cstdint>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "snum/random.hpp"
#include "snum/spaces.hpp"

namespace snum {

struct AscentResult {
  double value = 0.0;
  Vector argmax;  // normalized to ||argmax||_p = 1
  int evaluations = 0;
};

/// Sampled and locally refined maximization of g(x) / ||x||_p over x != 0.
///
/// g must be positively homogeneous of degree one. The value returned is attained
/// at `argmax`, so it is a certified lower bound for the supremum. Starts are the
/// caller's candidates plus random points of the unit sphere; the best few are
/// refined by adaptive random-direction hill climbing.
inline AscentResult sampled_ascent(const std::function<double(const Vector&)>& g, int n, Exponent p,
                                   Field field, int budget, std::uint64_t seed,
                                   const std::vector<Vector>& seeds = {}) {
  Rng rng = make_rng(seed, 0xA5CE);
  AscentResult out;
  out.argmax = Vector::Zero(n);
  out.argmax[0] = 1.0;
  budget = std::max(budget, 16);

  auto ratio = [&](const Vector& x) {
    ++out.evaluations;
    const double nx = lp_norm(x, p);
    return nx > 0.0 ? g(x) / nx : 0.0;
  };

  std::vector<std::pair<double, Vector>> pool;
  for (const auto& s : seeds) {
    if (s.size() != n || lp_norm(s, p) == 0.0) continue;
    pool.emplace_back(ratio(s), s / lp_norm(s, p));
  }
  const int random_starts = std::max(8, budget / 8);
  for (int t = 0; t < random_starts; ++t) {
    Vector x = sample_sphere(p, n, field, rng);
    pool.emplace_back(ratio(x), std::move(x));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  out.value = pool.front().first;
  out.argmax = pool.front().second;

  const std::size_t climbers = std::min<std::size_t>(pool.size(), 4);
  const int remaining = std::max(0, budget - out.evaluations);
  const int per_climber = std::max(1, remaining / static_cast<int>(climbers));
  for (std::size_t c = 0; c < climbers; ++c) {
    Vector x = pool[c].second;
    double fx = pool[c].first;
    double step = 0.25;
    int fails = 0;
    const int stop_at = out.evaluations + per_climber;
    while (out.evaluations < stop_at && step > 1e-12) {
      Vector d;
      if (fails % 3 == 2) {
        // coordinate move
        d = Vector::Zero(n);
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        d[j] = field == Field::real ? std::complex<double>(1.0, 0.0)
                                    : std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng));
      } else {
        d = random_direction(n, field, rng);
      }
      bool moved = false;
      for (double sgn : {1.0, -1.0}) {
        Vector y = x + sgn * step * d;
        const double fy = ratio(y);
        if (fy > fx) {
          const double ny = lp_norm(y, p);
          x = y / ny;
          fx = fy;
          moved = true;
          break;
        }
      }
      if (moved) {
        fails = 0;
        step = std::min(0.5, step * 1.5);
      } else if (++fails >= 2 * n + 2) {
        fails = 0;
        step *= 0.5;
      }
    }
    if (fx > out.value) {
      out.value = fx;
      out.argmax = x;
    }
  }
  return out;
}

}  // namespace snum
