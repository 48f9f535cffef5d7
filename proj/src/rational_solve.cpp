#include "toruskk/rational_solve.hpp"

#include <utility>

namespace toruskk {

std::optional<RationalVector> solveLinear(const IntMatrix& A, const RationalVector& b) {
  std::size_t rows = A.rows(), cols = A.cols();
  if (b.size() != rows)
    fail(ErrorKind::Dimension, "rhs length does not match row count");
  RationalMatrix aug(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = Rational(A.at(r, c));
    aug[r][cols] = b[r];
  }
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[r], aug[p]);
    Rational inv = aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivotCols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivotCols.size(); ++i) x[pivotCols[i]] = aug[i][cols];
  return x;
}

int detSign(RationalMatrix m) {
  std::size_t n = m.size();
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    if (m[c][c] < 0) sign = -sign;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return sign;
}

} // namespace toruskk
