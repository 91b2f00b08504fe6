#pragma once

#include <complex>
#include <cstdlib>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace snum {

/// Malformed matrix input, with the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedMatrix {
  Eigen::MatrixXcd matrix;
  bool has_complex = false;
};

namespace detail {

inline bool parse_real(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size() && std::isfinite(out);
}

/// Decimal real, "bi", or "a+bi" / "a-bi". A bare "i" means 1i.
inline bool parse_scalar(std::string token, std::complex<double>& out) {
  if (token.empty()) return false;
  if (token.back() != 'i') {
    double re = 0.0;
    if (!parse_real(token, re)) return false;
    out = {re, 0.0};
    return true;
  }
  token.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = token.size(); i-- > 1;) {
    if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_value = [](const std::string& s, double& v) {
    if (s.empty() || s == "+") {
      v = 1.0;
      return true;
    }
    if (s == "-") {
      v = -1.0;
      return true;
    }
    return parse_real(s, v);
  };
  double re = 0.0, im = 0.0;
  if (split == std::string::npos) {
    if (!imag_value(token, im)) return false;
  } else {
    if (!parse_real(token.substr(0, split), re)) return false;
    if (!imag_value(token.substr(split), im)) return false;
  }
  out = {re, im};
  return true;
}

}  // namespace detail

/// Reads a dense matrix from CSV: one row per line, comma-separated scalars.
/// Blank lines and lines starting with '#' are skipped.
inline ParsedMatrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<std::complex<double>>> rows;
  ParsedMatrix out;
  std::string line;
  int line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::complex<double>> row;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      const std::size_t stop = comma == std::string::npos ? line.size() : comma;
      std::string raw = line.substr(pos, stop - pos);
      const auto b = raw.find_first_not_of(" \t");
      const auto e = raw.find_last_not_of(" \t");
      const int column = static_cast<int>(pos + (b == std::string::npos ? 0 : b)) + 1;
      std::string token = b == std::string::npos ? std::string() : raw.substr(b, e - b + 1);
      std::complex<double> value;
      if (token.empty()) throw ParseError(line_no, column, "empty entry");
      if (!detail::parse_scalar(token, value)) throw ParseError(line_no, column, "invalid scalar '" + token + "'");
      if (value.imag() != 0.0) out.has_complex = true;
      row.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw ParseError(line_no, 1,
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no + 1, 1, "no matrix rows found");
  out.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      out.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return out;
}

}  // namespace snum
