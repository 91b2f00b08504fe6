#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "snum/entropy.hpp"
#include "snum/matrix_io.hpp"
#include "snum/operators.hpp"
#include "snum/spaces.hpp"
#include "snum/spectral.hpp"
#include "snum/widths.hpp"

namespace snum::cli {

enum class Command { idnumbers, estimate, verify, volume, sweep };
enum class Output { json, csv };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::idnumbers: return "idnumbers";
    case Command::estimate: return "estimate";
    case Command::verify: return "verify";
    case Command::volume: return "volume";
    case Command::sweep: return "sweep";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  Command command = Command::idnumbers;
  Exponent p = 2.0;
  Exponent q = 2.0;
  int n = 4;
  int k_lo = 1;
  int k_hi = 1;
  Field field = Field::real;
  std::uint64_t seed = kDefaultSeed;
  int budget = 10000;
  double tol = 1e-9;
  Output output = Output::json;
  std::optional<std::string> input;
  std::vector<std::string> quantities{"e", "a", "d"};
  bool inject_weyl_bug = false;
};

/// Seed from the SNUM_SEED environment variable, else the default.
inline std::uint64_t seed_from_env() {
  const char* env = std::getenv("SNUM_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw std::invalid_argument("SNUM_SEED is not an unsigned integer");
  return v;
}

/// "3" or "1..4".
inline std::pair<int, int> parse_k_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    const int v = std::stoi(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad index '" + t + "'");
    return v;
  };
  const auto dots = s.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = to_int(s);
    } else {
      lo = to_int(s.substr(0, dots));
      hi = to_int(s.substr(dots + 2));
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--k expects an index or a range a..b, got '" + s + "'");
  }
  if (lo < 1 || hi < lo) throw std::invalid_argument("--k range must satisfy 1 <= a <= b");
  return {lo, hi};
}

struct Row {
  std::string quantity;
  int k = 0;
  std::optional<double> lower;
  std::optional<double> upper;
  bool exact = false;
  std::string method;
  std::string label;
  double elapsed_ms = 0.0;
};

struct Violation {
  std::string check;
  std::string instance;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct Report {
  RunConfig config;
  std::vector<Row> rows;
  std::vector<Violation> violations;
};

inline nlohmann::json exponent_json(Exponent e) {
  if (e.is_inf()) return "inf";
  return e.value();
}

inline nlohmann::json optional_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = to_string(c.command);
  j["p"] = exponent_json(c.p);
  j["q"] = exponent_json(c.q);
  j["n"] = c.n;
  j["k"] = {c.k_lo, c.k_hi};
  j["field"] = to_string(c.field);
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["tol"] = c.tol;
  j["output"] = c.output == Output::json ? "json" : "csv";
  j["input"] = c.input ? nlohmann::json(*c.input) : nlohmann::json(nullptr);
  j["quantities"] = c.quantities;
  return j;
}

inline std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["config"] = config_json(r.config);
  j["rows"] = nlohmann::ordered_json::array();
  for (const Row& row : r.rows) {
    nlohmann::ordered_json o;
    o["quantity"] = row.quantity;
    o["k"] = row.k;
    o["lower"] = optional_json(row.lower);
    o["upper"] = optional_json(row.upper);
    o["exact"] = row.exact;
    o["method"] = row.method;
    o["label"] = row.label;
    o["elapsed_ms"] = row.elapsed_ms;
    j["rows"].push_back(o);
  }
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json o;
    o["check"] = v.check;
    o["instance"] = v.instance;
    o["k"] = v.k;
    o["lhs"] = v.lhs;
    o["rhs"] = v.rhs;
    j["violations"].push_back(o);
  }
  return j.dump(2) + "\n";
}

inline std::string csv_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "";
  return nlohmann::json(*v).dump();
}

inline std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "# config " << config_json(r.config).dump() << "\n";
  out << "quantity,k,lower,upper,exact,method,label,elapsed_ms\n";
  for (const Row& row : r.rows) {
    out << csv_text(row.quantity) << ',' << row.k << ',' << csv_number(row.lower) << ',' << csv_number(row.upper)
        << ',' << (row.exact ? "true" : "false") << ',' << csv_text(row.method) << ',' << csv_text(row.label) << ','
        << nlohmann::json(row.elapsed_ms).dump() << "\n";
  }
  for (const Violation& v : r.violations)
    out << "# violation " << v.check << " " << v.instance << " k=" << v.k << " lhs=" << nlohmann::json(v.lhs).dump()
        << " rhs=" << nlohmann::json(v.rhs).dump() << "\n";
  return out.str();
}

inline std::string render(const Report& r) { return r.config.output == Output::json ? to_json(r) : to_csv(r); }

inline void sort_rows(Report& r) {
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const Row& a, const Row& b) {
    if (a.quantity != b.quantity) return a.quantity < b.quantity;
    return a.k < b.k;
  });
}

namespace detail {

inline Row envelope_row(const std::string& quantity, int k, const EnvelopeResult& env) {
  Row row{quantity, k};
  if (const auto* ncf = std::get_if<NoClosedForm>(&env)) {
    row.method = "none";
    row.label = "no closed form: " + ncf->reason;
    return row;
  }
  const auto& w = std::get<WidthEnvelope>(env);
  if (w.sidedness != Sidedness::upper_only) row.lower = w.lower;
  if (w.sidedness != Sidedness::lower_only) row.upper = w.upper;
  row.exact = w.constants_known && w.sidedness == Sidedness::exact;
  row.method = std::string("closed-form/") + to_string(w.sidedness);
  row.label = w.case_label;
  return row;
}

/// Entropy estimation is run when the cloud needed for 2^{k-1} centers fits the budget.
inline bool entropy_feasible(int n, int k_hi, int budget) {
  return n <= 8 && k_hi <= 12 && dyadic_count(k_hi) <= std::max(budget, 1);
}

inline void entropy_rows(Report& rep, const LinOp& t, const std::string& quantity) {
  const RunConfig& c = rep.config;
  EntropyOptions opt;
  opt.cloud = std::clamp(c.budget / 2, static_cast<int>(dyadic_count(c.k_hi)), 4000);
  opt.pack_budget = std::clamp(c.budget / 2, 16, 4000);
  opt.seed = c.seed;
  const auto bounds = entropy_bounds(t, c.k_hi, opt);
  for (int k = c.k_lo; k <= c.k_hi; ++k) {
    const BoundPair& b = bounds[static_cast<std::size_t>(k - 1)];
    Row row{quantity, k};
    row.lower = b.lower;
    row.upper = b.upper;
    row.method = std::string(to_string(b.method_lower)) + "/" + to_string(b.method_upper);
    std::ostringstream label;
    label << (b.certified_upper ? "certified" : "sample-relative") << " delta=" << nlohmann::json(b.margin).dump();
    row.label = label.str();
    rep.rows.push_back(row);
  }
}

}  // namespace detail

inline void check_exponents(const RunConfig& c) {
  if (c.n < 1) throw std::domain_error("--n must be >= 1");
  if (c.budget < 1) throw std::domain_error("--budget must be >= 1");
  if (!(c.tol > 0.0)) throw std::domain_error("--tol must be positive");
}

inline Report run_idnumbers(const RunConfig& cfg) {
  check_exponents(cfg);
  Report rep{cfg};
  auto wants = [&](const char* q) {
    return std::find(cfg.quantities.begin(), cfg.quantities.end(), q) != cfg.quantities.end();
  };
  for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
    if (wants("e")) {
      Row row{"e", k};
      if (cfg.q < cfg.p) {
        row.method = "none";
        row.label = "no closed form: requires p <= q";
      } else {
        const Envelope env = regime_envelope(cfg.p, cfg.q, cfg.n, k, cfg.field);
        row.lower = env.value;
        row.upper = env.value;
        row.method = "regime-envelope";
        row.label = to_string(env.regime);
      }
      rep.rows.push_back(row);
    }
    if (wants("a")) rep.rows.push_back(detail::envelope_row("a", k, approx_id_envelope(cfg.p, cfg.q, cfg.n, k)));
    if (wants("d"))
      rep.rows.push_back(detail::envelope_row("d", k, kolmogorov_id_envelope(cfg.p, cfg.q, cfg.n, k, cfg.field)));
  }
  if (wants("e") && detail::entropy_feasible(cfg.n, cfg.k_hi, cfg.budget))
    detail::entropy_rows(rep, LinOp::identity(cfg.n, cfg.p, cfg.q, cfg.field), "e_bounds");
  sort_rows(rep);
  return rep;
}

inline LinOp load_operator(const RunConfig& cfg) {
  if (!cfg.input) throw std::invalid_argument("estimate requires --input");
  std::ifstream in(*cfg.input);
  if (!in) throw std::invalid_argument("cannot open input file '" + *cfg.input + "'");
  const ParsedMatrix m = parse_matrix_csv(in);
  return LinOp(m.matrix, cfg.p, cfg.q, cfg.field);
}

inline Report run_estimate(const RunConfig& cfg) {
  check_exponents(cfg);
  const LinOp t = load_operator(cfg);
  Report rep{cfg};
  auto wants = [&](const char* q) {
    return std::find(cfg.quantities.begin(), cfg.quantities.end(), q) != cfg.quantities.end();
  };
  if (wants("e")) {
    if (dyadic_count(cfg.k_hi) > cfg.budget) throw std::domain_error("--budget too small for 2^{k-1} centers");
    detail::entropy_rows(rep, t, "e");
  }
  for (const char* quantity : {"a", "d"}) {
    if (!wants(quantity)) continue;
    const bool approx = quantity[0] == 'a';
    std::optional<SNumberSeq> exact;
    if (t.is_hilbert()) exact = hilbert_s_numbers(t);
    for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
      Row row{quantity, k};
      if (exact) {
        row.lower = row.upper = exact->at(k);
        row.exact = true;
        row.method = "svd";
        row.label = "hilbert";
      } else if (approx) {
        const SearchResult s = approx_upper_search(t, k, cfg.budget, cfg.seed);
        row.upper = s.value;
        row.method = "approx-search";
        row.label = s.certified ? "certified upper" : "estimate";
      } else {
        const KolmogorovSearch s = kolmogorov_upper_search(t, k, cfg.budget, cfg.seed);
        row.upper = s.value;
        row.method = "subspace-search";
        row.label = "estimate";
      }
      rep.rows.push_back(row);
    }
  }
  sort_rows(rep);
  return rep;
}

inline Report run_volume(const RunConfig& cfg) {
  check_exponents(cfg);
  Report rep{cfg};
  Row row{"volume", cfg.n};
  row.lower = row.upper = ball_volume(SpaceSpec(cfg.p, cfg.n, cfg.field));
  row.exact = true;
  row.method = "gamma-formula";
  row.label = std::string("unit ball of l_p^n, ") + to_string(cfg.field);
  rep.rows.push_back(row);
  return rep;
}

/// Regime envelope at both breakpoints for n = 4, 8, ..., up to cfg.n; flags any
/// boundary where adjacent pieces differ by more than a factor 2.
inline Report run_sweep(const RunConfig& cfg) {
  check_exponents(cfg);
  if (cfg.q < cfg.p) throw std::domain_error("sweep requires p <= q");
  Report rep{cfg};
  for (int n = 4; n <= std::max(cfg.n, 4); n *= 2) {
    const double big = cfg.field == Field::complex ? 2.0 * n : n;
    const int k1 = static_cast<int>(std::ceil(std::log2(big)));
    const int k2 = static_cast<int>(big);
    const std::string tag = "e[n=" + std::to_string(n) + "]";
    struct Edge {
      int k;
      Regime left, right;
    };
    for (const Edge& e : {Edge{k1, Regime::small_k, Regime::mid_k}, Edge{k2, Regime::mid_k, Regime::large_k}}) {
      const double a = regime_piece(e.left, cfg.p, cfg.q, n, e.k, cfg.field);
      const double b = regime_piece(e.right, cfg.p, cfg.q, n, e.k, cfg.field);
      Row row{tag, e.k};
      row.lower = std::min(a, b);
      row.upper = std::max(a, b);
      row.method = "regime-envelope";
      row.label = std::string(to_string(e.left)) + "|" + to_string(e.right);
      rep.rows.push_back(row);
      const double ratio = std::max(a, b) / std::min(a, b);
      if (ratio > 2.0 * (1.0 + cfg.tol)) rep.violations.push_back({"regime-continuity", tag, e.k, ratio, 2.0});
    }
  }
  sort_rows(rep);
  return rep;
}

namespace detail {

inline Matrix random_matrix(int rows, int cols, Field f, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = f == Field::real ? std::complex<double>(gaussian(rng), 0.0)
                                 : std::complex<double>(gaussian(rng), gaussian(rng));
  return m;
}

inline void summary_row(Report& rep, const std::string& name, int checks, std::size_t before, const std::string& method) {
  Row row{name, 0};
  row.lower = static_cast<double>(checks);
  row.upper = static_cast<double>(rep.violations.size() - before);
  row.exact = true;
  row.method = method;
  row.label = "lower=checks upper=violations";
  rep.rows.push_back(row);
}

}  // namespace detail

/// Property suite at the configured seed and budget; a nonempty violation list
/// means exit code 1.
inline Report run_verify(const RunConfig& cfg) {
  check_exponents(cfg);
  Report rep{cfg};
  const double tol = cfg.tol;
  const std::vector<double> p_grid{0.5, 1.0, 2.0, 4.0};

  {  // eigenvalue / singular value inequalities
    const std::size_t before = rep.violations.size();
    int checks = 0;
    for (int trial = 0; trial < 40; ++trial) {
      Rng rng = make_rng(cfg.seed, 0x3E71 + static_cast<std::uint64_t>(trial));
      const Field f = trial % 2 == 0 ? Field::real : Field::complex;
      const int n = 1 + trial % 6;
      const LinOp t(detail::random_matrix(n, n, f, rng), 2.0, 2.0, f);
      const WeylReport w = weyl_check(t, p_grid, tol, cfg.inject_weyl_bug);
      checks += w.checks;
      for (const auto& v : w.violations)
        rep.violations.push_back({"weyl-" + v.check, "trial " + std::to_string(trial), v.k, v.lhs, v.rhs});
    }
    detail::summary_row(rep, "verify:weyl", checks, before, "eigen/svd");
  }
  {  // quasi-norm sandwich
    const std::size_t before = rep.violations.size();
    int checks = 0;
    Rng rng = make_rng(cfg.seed, 0xA0C1);
    for (double pv : {0.5, 0.8}) {
      const Exponent p(pv);
      const double c0 = 2.0 * quasi_constant(p);
      for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 4;
        const Vector x = detail::random_matrix(n, 1, Field::real, rng).col(0);
        const double base = lp_norm(x, p);
        const double v = aoki_norm(x, p, 3, 8, cfg.seed + static_cast<std::uint64_t>(trial));
        checks += 2;
        if (v > base * (1.0 + tol)) rep.violations.push_back({"aoki-upper", "p=" + p.to_string(), trial, v, base});
        if (base / (c0 * c0) > v * (1.0 + tol))
          rep.violations.push_back({"aoki-lower", "p=" + p.to_string(), trial, base / (c0 * c0), v});
      }
    }
    detail::summary_row(rep, "verify:aoki", checks, before, "decomposition-search");
  }
  {  // s-scale axioms on exact Hilbert s-numbers
    const std::size_t before = rep.violations.size();
    const AxiomReport a = s_axiom_suite(exact_hilbert_source(), 20, cfg.seed);
    for (const auto& v : a.violations)
      rep.violations.push_back({std::string("axiom-") + to_string(v.axiom), "trial " + std::to_string(v.trial),
                                v.index, v.lhs, v.rhs});
    detail::summary_row(rep, "verify:axioms", a.checks, before, "svd");
  }
  {  // entropy brackets: certified lower vs sample-relative upper, Carl and the Hilbert bracket
    const std::size_t before = rep.violations.size();
    int checks = 0;
    const int cloud = std::clamp(cfg.budget / 4, 64, 2500);
    const int k_max = cloud >= 16 ? 4 : 3;
    struct Case {
      Exponent p, q;
    };
    for (const Case& c : {Case{1.0, Exponent::infinity()}, Case{2.0, 2.0}, Case{0.5, 1.0}}) {
      const LinOp t = LinOp::identity(2, c.p, c.q);
      EntropyOptions opt{cloud, cloud, cfg.seed};
      const auto b = entropy_bounds(t, k_max, opt);
      for (const BoundPair& bp : b) {
        ++checks;
        const double up = *bp.upper + bp.margin;
        if (bp.lower > up * (1.0 + tol))
          rep.violations.push_back({"entropy-bracket", "id " + c.p.to_string() + "->" + c.q.to_string(), bp.k,
                                    bp.lower, up});
      }
    }
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::complex<double>> d;
      for (int i = 0; i < n; ++i) d.emplace_back(1.0 / (i + 1.0), 0.0);
      const LinOp t = LinOp::diagonal(d, 2.0, 2.0);
      EntropyOptions opt{cloud, cloud, cfg.seed};
      const auto b = entropy_bounds(t, k_max, opt);
      std::vector<double> uppers;
      for (const BoundPair& bp : b) uppers.push_back(*bp.upper + bp.margin);
      const CarlReport carl = carl_check(t, uppers, k_max, tol);
      checks += carl.checks;
      for (const auto& v : carl.violations)
        rep.violations.push_back({"carl-" + v.check, "diag n=" + std::to_string(n), v.k, v.lhs, v.rhs});
      for (const BoundPair& bp : b) {
        const HilbertBracketReport h = hilbert_entropy_bracket(t, bp.k, bp, tol);
        checks += 2;
        if (!h.upper_ok)
          rep.violations.push_back({"hilbert-bracket-upper", "diag n=" + std::to_string(n), bp.k, h.g,
                                    *h.upper + h.margin});
        if (!h.lower_ok)
          rep.violations.push_back({"hilbert-bracket-lower", "diag n=" + std::to_string(n), bp.k, h.lower, 14.0 * h.g});
      }
    }
    detail::summary_row(rep, "verify:entropy", checks, before, "packing/greedy-cover");
  }
  sort_rows(rep);
  return rep;
}

inline Report run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::idnumbers: return run_idnumbers(cfg);
    case Command::estimate: return run_estimate(cfg);
    case Command::verify: return run_verify(cfg);
    case Command::volume: return run_volume(cfg);
    case Command::sweep: return run_sweep(cfg);
  }
  throw std::logic_error("unknown command");
}

}  // namespace snum::cli
