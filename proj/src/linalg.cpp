#include "koszul/linalg.hpp"

namespace koszul {

namespace {

// Returns pivot columns after in-place reduced row echelon.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace koszul
