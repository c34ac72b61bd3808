#include "diffalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace diffalg {

std::size_t fraction_free_rank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  std::size_t rank = 0;
  Integer prev(1);
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;  // column already cleared below row `rank`
    std::swap(m[pivot], m[rank]);
    // One-step fraction-free elimination: entries stay determinants of
    // minors of the input, so the division by the previous pivot is exact.
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const RationalMatrix& m) {
  IntegerMatrix scaled(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Integer l(1);
    for (const auto& x : m[i]) l = lcm(l, denominator(x));
    scaled[i].reserve(m[i].size());
    for (const auto& x : m[i])
      scaled[i].push_back(numerator(x) * (l / denominator(x)));
  }
  return fraction_free_rank(std::move(scaled));
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    Rational inv = Rational(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent row 0 = b[i]

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace diffalg
