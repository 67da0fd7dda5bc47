#include "h4/linalg.hpp"

#include <utility>

namespace h4 {

namespace {

void clear_row_denominators(Matrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    l = lcm(l, m(r, c).a().den());
    l = lcm(l, m(r, c).b().den());
  }
  if (l == 1) return;
  FieldElement s{Rational(l)};
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

RowEchelon fraction_free_reduce(Matrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) clear_row_denominators(m, r);
  std::vector<std::size_t> pivots;
  FieldElement prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, row);
    const FieldElement piv = m(row, col);
    const FieldElement prev_inv = prev.inv();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const FieldElement factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        FieldElement v = piv * m(i, j);
        if (!factor.is_zero() && !m(row, j).is_zero()) v -= factor * m(row, j);
        m(i, j) = v * prev_inv;
      }
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return fraction_free_reduce(m).pivot_cols.size(); }

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  RowEchelon e = fraction_free_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElement> v(m.cols());
    v[f] = FieldElement(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      std::size_t c = e.pivot_cols[i];
      v[c] = -e.reduced(i, f) / e.reduced(i, c);
    }
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    FieldElement s = v[lead].inv();
    for (auto& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace h4
