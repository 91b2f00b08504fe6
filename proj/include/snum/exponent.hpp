#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace snum {

/// Exponent p of an l_p space, 0 < p <= inf. Infinity is a first-class value.
class Exponent {
 public:
  Exponent(double value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (!(value > 0.0)) throw std::domain_error("exponent must satisfy p > 0");
  }

  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const { return value_; }
  bool is_inf() const { return std::isinf(value_); }
  /// 1/p, with 1/inf evaluated as 0.
  double inverse() const { return is_inf() ? 0.0 : 1.0 / value_; }

  std::string to_string() const;

  friend bool operator==(Exponent a, Exponent b) { return a.value_ == b.value_; }
  friend auto operator<=>(Exponent a, Exponent b) { return a.value_ <=> b.value_; }

 private:
  double value_;
};

/// Parses "inf", "infinity" or a decimal literal.
inline Exponent parse_exponent(const std::string& token) {
  std::string t = token;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity" || t == "oo") return Exponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid exponent '" + token + "'");
  }
  if (used != t.size() || std::isnan(v)) throw std::invalid_argument("invalid exponent '" + token + "'");
  return Exponent(v);
}

inline std::string Exponent::to_string() const {
  if (is_inf()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

enum class Field { real, complex };

inline const char* to_string(Field f) { return f == Field::real ? "real" : "complex"; }

/// The space l_p^n over R or C.
struct SpaceSpec {
  Exponent p;
  int n;
  Field field = Field::real;

  SpaceSpec(Exponent p_, int n_, Field field_ = Field::real) : p(p_), n(n_), field(field_) {
    if (n < 1) throw std::domain_error("space dimension must be >= 1");
  }

  /// Real dimension: n for R^n, 2n for C^n identified with R^{2n}.
  int volumetric_dim() const { return field == Field::real ? n : 2 * n; }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

/// (sum |x_j|^p)^{1/p}, or max |x_j| for p = inf.
template <class Derived>
double lp_norm(const Eigen::MatrixBase<Derived>& x, Exponent p) {
  if (x.size() == 0) throw std::domain_error("lp_norm of an empty vector");
  double peak = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) peak = std::max(peak, static_cast<double>(std::abs(x(j))));
  if (p.is_inf() || peak == 0.0) return peak;
  const double e = p.value();
  double sum = 0.0;
  if (e == 1.0) {
    for (Eigen::Index j = 0; j < x.size(); ++j) sum += std::abs(x(j));
    return sum;
  }
  if (e == 2.0) {
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double t = std::abs(x(j)) / peak;
      sum += t * t;
    }
    return peak * std::sqrt(sum);
  }
  for (Eigen::Index j = 0; j < x.size(); ++j) sum += std::pow(std::abs(x(j)) / peak, e);
  return peak * std::pow(sum, 1.0 / e);
}

/// Quasi-triangle constant of l_p: max(1, 2^{1/p-1}).
inline double quasi_constant(Exponent p) {
  return std::max(1.0, std::exp2(p.inverse() - 1.0));
}

/// Exponent rho = ln 2 / ln(2C) of the equivalent rho-norm.
inline double rho_exponent(double quasi_c) {
  if (!(quasi_c >= 1.0)) throw std::domain_error("quasi-norm constant must be >= 1");
  if (quasi_c == 1.0) return 1.0;
  return std::log(2.0) / std::log(2.0 * quasi_c);
}

}  // namespace snum
