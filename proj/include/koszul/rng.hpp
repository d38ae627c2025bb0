#ifndef KOSZUL_RNG_HPP
#define KOSZUL_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

#include "koszul/rational.hpp"

namespace koszul {

/// Seeded deterministic RNG. Sampling goes through the helpers below rather
/// than std:: distributions so that identical seeds give identical streams
/// on every platform / standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [lo, hi], inclusive.
  long next_int(long lo, long hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  bool next_bool() { return (gen_() & 1u) != 0; }

  /// Small exact coefficient: numerator in [-9, 9], denominator mostly 1.
  Rational next_coeff() {
    long num = next_int(-9, 9);
    long den = 1;
    switch (next_int(0, 4)) {
      case 3: den = 2; break;
      case 4: den = 3; break;
      default: break;
    }
    return rat(num, den);
  }

  /// Nonzero variant of next_coeff.
  Rational next_coeff_nonzero() {
    Rational q = next_coeff();
    while (is_zero(q)) q = next_coeff();
    return q;
  }

  /// Sub-generator with a stream derived from this seed and a label;
  /// used to give every suite its own reproducible stream.
  static Rng for_suite(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return Rng(seed ^ h);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace koszul

#endif
