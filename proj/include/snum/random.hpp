#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "snum/exponent.hpp"

namespace snum {

using Rng = std::mt19937_64;

/// Deterministic generator for (seed, stream). Independent trials use distinct streams.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

/// Point on the unit sphere of l_p^n distributed by cone measure.
///
/// Coordinates are drawn from the density proportional to exp(-|t|^p) (real) or
/// exp(-|z|^p) (complex) and the vector is normalized. For p = inf the coordinates
/// are uniform on [-1,1] (real) or on the unit disc (complex).
inline Eigen::VectorXcd sample_sphere(Exponent p, int n, Field field, Rng& rng) {
  Eigen::VectorXcd x(n);
  for (int j = 0; j < n; ++j) {
    double modulus;
    if (p.is_inf()) {
      modulus = field == Field::real ? uniform01(rng) : std::sqrt(uniform01(rng));
    } else {
      // |t|^p ~ Gamma(1/p) (real) or Gamma(2/p) (complex, with the polar Jacobian).
      const double shape = (field == Field::real ? 1.0 : 2.0) / p.value();
      const double g = std::gamma_distribution<double>(shape, 1.0)(rng);
      modulus = std::pow(g, 1.0 / p.value());
    }
    if (field == Field::real) {
      x[j] = uniform01(rng) < 0.5 ? -modulus : modulus;
    } else {
      const double theta = 2.0 * std::numbers::pi * uniform01(rng);
      x[j] = std::polar(modulus, theta);
    }
  }
  const double norm = lp_norm(x, p);
  if (norm == 0.0) {
    x.setZero();
    x[0] = 1.0;
    return x;
  }
  return x / norm;
}

/// Uniform point in the closed unit ball of l_p^n.
inline Eigen::VectorXcd sample_ball(Exponent p, int n, Field field, Rng& rng) {
  const int dim = field == Field::real ? n : 2 * n;
  const double radius = std::pow(uniform01(rng), 1.0 / dim);
  return sample_sphere(p, n, field, rng) * radius;
}

/// Random direction for local search moves (Euclidean unit length).
inline Eigen::VectorXcd random_direction(int n, Field field, Rng& rng) {
  Eigen::VectorXcd d(n);
  for (int j = 0; j < n; ++j) {
    d[j] = field == Field::real ? std::complex<double>(gaussian(rng), 0.0)
                                : std::complex<double>(gaussian(rng), gaussian(rng));
  }
  const double len = d.norm();
  return len > 0.0 ? Eigen::VectorXcd(d / len) : d;
}

}  // namespace snum
