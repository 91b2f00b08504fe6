#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snum/cli.hpp"

namespace {

struct Flags {
  std::string p = "2";
  std::string q = "2";
  int n = 4;
  std::string k = "1";
  std::string field = "real";
  std::optional<std::uint64_t> seed;
  int budget = 10000;
  double tol = 1e-9;
  std::string output = "json";
  std::string input;
  std::vector<std::string> quantities;
  bool inject_weyl_bug = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--p", f.p, "domain exponent (decimal or inf)");
  cmd->add_option("--q", f.q, "target exponent (decimal or inf)");
  cmd->add_option("--n", f.n, "dimension");
  cmd->add_option("--k", f.k, "index or range a..b");
  cmd->add_option("--field", f.field, "scalar field")->check(CLI::IsMember({"real", "complex"}));
  cmd->add_option("--seed", f.seed, "random seed (default: $SNUM_SEED, else 42)");
  cmd->add_option("--budget", f.budget, "evaluation budget");
  cmd->add_option("--tol", f.tol, "relative tolerance");
  cmd->add_option("--output", f.output, "report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--input", f.input, "matrix CSV file");
  cmd->add_option("--quantity", f.quantities, "quantities to report (e, a, d)")
      ->check(CLI::IsMember({"e", "a", "d"}))
      ->delimiter(',');
  cmd->add_flag("--inject-weyl-bug", f.inject_weyl_bug)->group("");
}

snum::cli::RunConfig resolve(snum::cli::Command command, const Flags& f) {
  snum::cli::RunConfig c;
  c.command = command;
  c.p = snum::parse_exponent(f.p);
  c.q = snum::parse_exponent(f.q);
  c.n = f.n;
  std::tie(c.k_lo, c.k_hi) = snum::cli::parse_k_range(f.k);
  c.field = f.field == "complex" ? snum::Field::complex : snum::Field::real;
  c.seed = f.seed ? *f.seed : snum::cli::seed_from_env();
  c.budget = f.budget;
  c.tol = f.tol;
  c.output = f.output == "csv" ? snum::cli::Output::csv : snum::cli::Output::json;
  if (!f.input.empty()) c.input = f.input;
  if (!f.quantities.empty()) c.quantities = f.quantities;
  c.inject_weyl_bug = f.inject_weyl_bug;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-numbers of finite-dimensional operators between l_p spaces"};
  app.require_subcommand(1);
  Flags flags;
  struct Entry {
    snum::cli::Command command;
    CLI::App* app;
  };
  std::vector<Entry> entries;
  const std::pair<snum::cli::Command, const char*> commands[] = {
      {snum::cli::Command::idnumbers, "closed-form envelopes and bounds for the identity l_p^n -> l_q^n"},
      {snum::cli::Command::estimate, "bounds for a matrix read from --input"},
      {snum::cli::Command::verify, "run the property suite; exit 1 on any violation"},
      {snum::cli::Command::volume, "volume of the unit ball of l_p^n"},
      {snum::cli::Command::sweep, "regime-envelope continuity over n = 4, 8, ..., --n"},
  };
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(snum::cli::to_string(command), help);
    add_flags(sub, flags);
    entries.push_back({command, sub});
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    for (const Entry& e : entries) {
      if (!e.app->parsed()) continue;
      const snum::cli::Report report = snum::cli::run(resolve(e.command, flags));
      std::cout << snum::cli::render(report);
      return report.violations.empty() ? 0 : 1;
    }
  } catch (const snum::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
