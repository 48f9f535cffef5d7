#include "toruskk/normal_form.hpp"

namespace toruskk {

HermiteDecomposition hermiteNormalForm(const IntMatrix& A) {
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(A.cols());
  std::size_t pivotCol = 0;
  for (std::size_t r = 0; r < A.rows() && pivotCol < A.cols(); ++r) {
    std::size_t j = pivotCol;
    while (j < A.cols() && H.at(r, j) == 0) ++j;
    if (j == A.cols()) continue; // no pivot in this row
    H.swapCols(pivotCol, j);
    U.swapCols(pivotCol, j);
    // clear the rest of row r to the right of the pivot
    for (j = pivotCol + 1; j < A.cols(); ++j) {
      if (H.at(r, j) == 0) continue;
      const Int a = H.at(r, pivotCol);
      const Int b = H.at(r, j);
      if (b % a == 0) {
        Int q = b / a;
        H.addColMultiple(j, pivotCol, -q);
        U.addColMultiple(j, pivotCol, -q);
        continue;
      }
      // general unimodular 2-column update via extended gcd
      auto [g, s, t] = xgcd(a, b);
      Int ag = a / g, bg = b / g;
      for (std::size_t rr = 0; rr < A.rows(); ++rr) {
        Int hp = H.at(rr, pivotCol), hj = H.at(rr, j);
        H.at(rr, pivotCol) = s * hp + t * hj;
        H.at(rr, j) = -bg * hp + ag * hj;
      }
      for (std::size_t rr = 0; rr < A.cols(); ++rr) {
        Int up = U.at(rr, pivotCol), uj = U.at(rr, j);
        U.at(rr, pivotCol) = s * up + t * uj;
        U.at(rr, j) = -bg * up + ag * uj;
      }
    }
    if (H.at(r, pivotCol) < 0) {
      H.negateCol(pivotCol);
      U.negateCol(pivotCol);
    }
    // reduce the columns left of the pivot into [0, pivot)
    for (j = 0; j < pivotCol; ++j) {
      Int q = floorDiv(H.at(r, j), H.at(r, pivotCol));
      H.addColMultiple(j, pivotCol, -q);
      U.addColMultiple(j, pivotCol, -q);
    }
    ++pivotCol;
  }
  return {std::move(H), std::move(U), pivotCol};
}

std::vector<Int> SmithDecomposition::invariantFactors() const {
  std::vector<Int> f;
  std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n && D.at(i, i) != 0; ++i) f.push_back(D.at(i, i));
  return f;
}

namespace {

// clear row t right of (t,t) and column t below it; terminates because
// |D(t,t)| strictly drops whenever a gcd step fires
void clearCross(IntMatrix& D, IntMatrix& U, IntMatrix& V, std::size_t t) {
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = t + 1; i < D.rows(); ++i) {
      if (D.at(i, t) == 0) continue;
      const Int a = D.at(t, t), b = D.at(i, t);
      if (b % a == 0) {
        Int q = b / a;
        D.addRowMultiple(i, t, -q);
        U.addRowMultiple(i, t, -q);
      } else {
        auto [g, s, tt] = xgcd(a, b);
        Int ag = a / g, bg = b / g;
        for (std::size_t c = 0; c < D.cols(); ++c) {
          Int dt = D.at(t, c), di = D.at(i, c);
          D.at(t, c) = s * dt + tt * di;
          D.at(i, c) = -bg * dt + ag * di;
        }
        for (std::size_t c = 0; c < U.cols(); ++c) {
          Int ut = U.at(t, c), ui = U.at(i, c);
          U.at(t, c) = s * ut + tt * ui;
          U.at(i, c) = -bg * ut + ag * ui;
        }
        dirty = true;
      }
    }
    for (std::size_t j = t + 1; j < D.cols(); ++j) {
      if (D.at(t, j) == 0) continue;
      const Int a = D.at(t, t), b = D.at(t, j);
      if (b % a == 0) {
        Int q = b / a;
        D.addColMultiple(j, t, -q);
        V.addColMultiple(j, t, -q);
      } else {
        auto [g, s, tt] = xgcd(a, b);
        Int ag = a / g, bg = b / g;
        for (std::size_t r = 0; r < D.rows(); ++r) {
          Int dt = D.at(r, t), dj = D.at(r, j);
          D.at(r, t) = s * dt + tt * dj;
          D.at(r, j) = -bg * dt + ag * dj;
        }
        for (std::size_t r = 0; r < V.rows(); ++r) {
          Int vt = V.at(r, t), vj = V.at(r, j);
          V.at(r, t) = s * vt + tt * vj;
          V.at(r, j) = -bg * vt + ag * vj;
        }
        dirty = true;
      }
    }
  }
}

} // namespace

SmithDecomposition smithNormalForm(const IntMatrix& A) {
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(A.rows());
  IntMatrix V = IntMatrix::identity(A.cols());
  std::size_t n = std::min(A.rows(), A.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // pivot search in the trailing block
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < D.rows() && !found; ++i)
      for (std::size_t j = t; j < D.cols() && !found; ++j)
        if (D.at(i, j) != 0) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    D.swapRows(t, pr);
    U.swapRows(t, pr);
    D.swapCols(t, pc);
    V.swapCols(t, pc);
    for (;;) {
      clearCross(D, U, V, t);
      // D(t,t) must divide the whole trailing block
      bool fixed = true;
      for (std::size_t i = t + 1; i < D.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < D.cols() && fixed; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            D.addRowMultiple(t, i, 1);
            U.addRowMultiple(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (D.at(t, t) < 0) {
      D.negateRow(t);
      U.negateRow(t);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

std::size_t rank(const IntMatrix& A) { return hermiteNormalForm(A).rank; }

IntMatrix canonicalLatticeBasis(const IntMatrix& A) {
  HermiteDecomposition hnf = hermiteNormalForm(A);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < hnf.rank; ++c) keep.push_back(c);
  return hnf.H.columns(keep);
}

} // namespace toruskk
