#ifndef KOSZUL_SUITES_HPP
#define KOSZUL_SUITES_HPP

#include <map>

#include "koszul/check.hpp"
#include "koszul/scenario.hpp"

namespace koszul {

struct SuiteResult {
  std::string name;
  long checks_run = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::string> info;  // reported-only facts (e.g. nondegeneracy rank)
  double wall_time_ms = 0.0;
};

struct Report {
  Scenario scenario;
  std::vector<SuiteResult> suites;

  long failures_total() const {
    long n = 0;
    for (const auto& s : suites) n += static_cast<long>(s.failures.size());
    return n;
  }
  bool passed() const { return failures_total() == 0; }
};

const std::vector<std::string>& known_suites();

/// Runs one named suite; deterministic given the scenario seed (each suite
/// derives its own stream from seed and name). Throws InvalidInput for
/// unknown names.
SuiteResult run_suite(const std::string& name, const Scenario& sc);

/// Runs every suite listed in the scenario; results sorted by name so the
/// report is deterministic.
Report run(const Scenario& sc);

/// JSON rendering of the report (schema documented in the README).
std::string report_to_json(const Report& rep);

}  // namespace koszul

#endif
