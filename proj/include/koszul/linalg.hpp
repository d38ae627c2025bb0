#ifndef KOSZUL_LINALG_HPP
#define KOSZUL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

/// Small dense exact matrix, only used for nullspace / rank computations
/// (Hamiltonian field solving, nondegeneracy reporting).
struct RationalMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}
  Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::size_t rank(RationalMatrix m);

/// Basis of { v : M v = 0 } by Gauss-Jordan elimination over Q.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

}  // namespace koszul

#endif
