#include "toruskk/lattice.hpp"

namespace toruskk {

bool isPrimitiveBasis(const IntMatrix& B) {
  if (B.cols() > B.rows())
    fail(ErrorKind::Dimension, "basis has more columns than ambient rank");
  if (B.cols() == 0) return true; // rank-0 lattice
  SmithDecomposition snf = smithNormalForm(B);
  std::vector<Int> factors = snf.invariantFactors();
  if (factors.size() != B.cols()) return false; // rank-deficient
  for (const Int& f : factors)
    if (f != 1) return false;
  return true;
}

IntMatrix saturate(const IntMatrix& B) {
  std::size_t k = B.cols();
  if (k == 0) return B;
  SmithDecomposition snf = smithNormalForm(B);
  if (snf.invariantFactors().size() != k)
    fail(ErrorKind::Rank, "saturate requires full column rank");
  // B = U^-1 D V^-1; the saturation is spanned by the first k columns of
  // U^-1, i.e. the columns of U^-1 matching the nonzero part of D
  HermiteDecomposition uinv = hermiteNormalForm(snf.U);
  if (!uinv.H.isIdentity())
    fail(ErrorKind::NotInvertible, "Smith witness U is not unimodular");
  std::vector<std::size_t> first;
  for (std::size_t c = 0; c < k; ++c) first.push_back(c);
  return canonicalLatticeBasis(uinv.U.columns(first));
}

IntMatrix integerKernelBasis(const IntMatrix& A) {
  HermiteDecomposition hnf = hermiteNormalForm(A);
  std::vector<std::size_t> zeroCols;
  for (std::size_t c = hnf.rank; c < A.cols(); ++c) zeroCols.push_back(c);
  // the kernel of an integer matrix is saturated, so the HNF of these
  // unimodular-complement columns is already a primitive basis
  return canonicalLatticeBasis(hnf.U.columns(zeroCols));
}

IntMatrix dualSection(const IntMatrix& B) {
  std::size_t k = B.cols();
  HermiteDecomposition hnf = hermiteNormalForm(B.transpose());
  std::vector<std::size_t> first;
  for (std::size_t c = 0; c < k; ++c) first.push_back(c);
  if (hnf.rank != k || !hnf.H.columns(first).isIdentity())
    fail(ErrorKind::Primitivity,
         "no integer section: basis is not primitive");
  return hnf.U.columns(first);
}

PlueckerVector plueckerMinors(const IntMatrix& B) {
  int d = static_cast<int>(B.rows());
  int k = static_cast<int>(B.cols());
  PlueckerVector p;
  p.d = d;
  p.k = k;
  for (const IndexSet& J : subsetsOfSize(d, k)) {
    std::vector<std::size_t> rows;
    for (int idx : J) rows.push_back(static_cast<std::size_t>(idx - 1));
    p.coefficients[J] = B.rowsSubset(rows).det();
  }
  return p;
}

} // namespace toruskk
