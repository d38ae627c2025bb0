#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "koszul/errors.hpp"
#include "koszul/parser.hpp"
#include "koszul/scenario.hpp"
#include "koszul/suites.hpp"

namespace {

int run_verify(const std::string& path, const std::string& out_path,
               const std::optional<std::uint64_t>& seed, const std::string& suites_csv) {
  koszul::Scenario sc = koszul::load_scenario(path);
  if (seed) sc.seed = *seed;
  if (!suites_csv.empty()) {
    sc.suites.clear();
    std::string cur;
    for (char c : suites_csv + ",") {
      if (c == ',') {
        if (!cur.empty()) sc.suites.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
  }
  if (sc.suites.empty()) sc.suites = koszul::known_suites();
  koszul::Report rep = koszul::run(sc);
  std::string json = koszul::report_to_json(rep);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(out_path);
    if (!out) throw koszul::InvalidInput("cannot write report to " + out_path);
    out << json;
  }
  for (const auto& s : rep.suites)
    std::cerr << (s.failures.empty() ? "pass" : "FAIL") << "  " << s.name << "  (" << s.checks_run
              << " checks, " << s.failures.size() << " failures)\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Cartan calculus, higher Courant and observable "
               "L-infinity structures on polynomial models"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites from a scenario file");
  std::string scenario_path;
  std::string out_path;
  std::string suites_csv;
  std::optional<std::uint64_t> seed;
  verify->add_option("scenario", scenario_path, "scenario file (key = value, [scenario] section)")
      ->required();
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");
  std::uint64_t seed_raw = 0;
  auto* seed_opt = verify->add_option("--seed", seed_raw, "override the scenario seed");
  verify->add_option("--suites", suites_csv, "comma-separated suite list overriding the scenario");

  auto* pform = app.add_subcommand("parse-form", "echo the canonical rendering of a form expression");
  std::string expr;
  int dim = 3;
  pform->add_option("expr", expr, "form expression")->required();
  pform->add_option("--dim", dim, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (*seed_opt) seed = seed_raw;
      return run_verify(scenario_path, out_path, seed, suites_csv);
    }
    if (*pform) {
      std::cout << koszul::render(koszul::parse_form(expr, dim)) << "\n";
      return 0;
    }
  } catch (const koszul::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const koszul::UnsupportedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
