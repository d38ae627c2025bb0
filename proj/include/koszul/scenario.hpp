#ifndef KOSZUL_SCENARIO_HPP
#define KOSZUL_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

/// Verification scenario: flat `key = value` text with a [scenario] section.
struct Scenario {
  int dim = 3;
  int r = 2;
  std::string sigma;  // form expression, form-degree r+1
  std::optional<std::string> beta;
  int max_poly_degree = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  int arity_bound = 0;  // 0: default r+2
};

Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Basic invariants (dim >= 1, r >= 1 for the bracket suites, sigma parses
/// and is homogeneous of form-degree r+1 and closed). Throws InvalidInput.
void validate_scenario(const Scenario& sc);

}  // namespace koszul

#endif
