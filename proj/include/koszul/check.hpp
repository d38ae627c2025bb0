#ifndef KOSZUL_CHECK_HPP
#define KOSZUL_CHECK_HPP

#include <string>
#include <vector>

namespace koszul {

/// One failed identity: which check, at which arity, on which inputs, and
/// the two sides that were supposed to agree. Inputs are serialized in the
/// expression grammar wherever one exists.
struct Failure {
  std::string check;
  int arity = 0;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string name;
  long checks_run = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  void merge(const CheckResult& other) {
    checks_run += other.checks_run;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace koszul

#endif
