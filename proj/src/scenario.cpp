#include "koszul/scenario.hpp"

#include <fstream>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/parser.hpp"
#include "koszul/suites.hpp"

namespace koszul {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      std::string t = trim(cur);
      if (!t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::string t = trim(cur);
  if (!t.empty()) out.push_back(t);
  return out;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string line;
  bool in_section = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      in_section = (t == "[scenario]");
      continue;
    }
    if (!in_section) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("scenario line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    try {
      if (key == "dim") {
        sc.dim = std::stoi(val);
      } else if (key == "r") {
        sc.r = std::stoi(val);
      } else if (key == "sigma") {
        sc.sigma = val;
      } else if (key == "beta") {
        sc.beta = val;
      } else if (key == "max_poly_degree") {
        sc.max_poly_degree = std::stoi(val);
      } else if (key == "samples") {
        sc.samples = std::stoi(val);
      } else if (key == "seed") {
        sc.seed = std::stoull(val);
      } else if (key == "suites") {
        sc.suites = split_list(val);
      } else if (key == "arity_bound") {
        sc.arity_bound = std::stoi(val);
      } else {
        throw InvalidInput("scenario line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw InvalidInput("scenario line " + std::to_string(lineno) + ": bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw InvalidInput("scenario line " + std::to_string(lineno) + ": value out of range for '" + key + "'");
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

void validate_scenario(const Scenario& sc) {
  if (sc.dim < 1) throw InvalidInput("scenario: dim must be >= 1");
  if (sc.samples < 1) throw InvalidInput("scenario: samples must be >= 1");
  if (sc.max_poly_degree < 0) throw InvalidInput("scenario: max_poly_degree must be >= 0");
  for (const auto& s : sc.suites) {
    const auto& ks = known_suites();
    bool ok = false;
    for (const auto& k : ks) ok = ok || (k == s);
    if (!ok) throw InvalidInput("scenario: unknown suite '" + s + "'");
  }
  const bool needs_r = !sc.suites.empty();
  if (needs_r && sc.r < 1) throw InvalidInput("scenario: r must be >= 1 for the bracket suites");
  if (!sc.sigma.empty()) {
    PolyForm s = parse_form(sc.sigma, sc.dim);
    if (!s.is_zero()) {
      if (!s.is_homogeneous() || s.form_degree() != sc.r + 1)
        throw InvalidInput("scenario: sigma must be homogeneous of form-degree r+1");
      if (!is_closed(s)) throw InvalidInput("scenario: sigma must be closed");
    }
  }
  if (sc.beta) {
    PolyForm b = parse_form(*sc.beta, sc.dim);
    if (!b.is_zero() && (!b.is_homogeneous() || b.form_degree() != sc.r))
      throw InvalidInput("scenario: beta must be homogeneous of form-degree r");
  }
}

}  // namespace koszul
