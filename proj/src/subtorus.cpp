#include "toruskk/subtorus.hpp"

#include <sstream>

#include "toruskk/rational_solve.hpp"

namespace toruskk {

OrientedSubtorus makeSubtorus(int d, Side side, IntMatrix basis) {
  if (d < 0) fail(ErrorKind::Dimension, "ambient dimension must be nonnegative");
  if (basis.rows() != static_cast<std::size_t>(d))
    fail(ErrorKind::Dimension, "basis must have d = " + std::to_string(d) + " rows");
  if (basis.cols() > basis.rows())
    fail(ErrorKind::Dimension, "basis has more columns than ambient dimension");
  if (basis.cols() > 0) {
    SmithDecomposition snf = smithNormalForm(basis);
    std::vector<Int> factors = snf.invariantFactors();
    if (factors.size() != basis.cols())
      fail(ErrorKind::Rank, "basis columns are linearly dependent");
    for (const Int& f : factors)
      if (f != 1) {
        std::ostringstream msg;
        msg << "basis is not primitive (Smith invariant " << f
            << " != 1): the subgroup map is not an embedding";
        fail(ErrorKind::Embedding, msg.str());
      }
  }
  return {d, side, std::move(basis)};
}

OrientedSubtorus trivialSubgroup(int d, Side side) {
  return {d, side, IntMatrix(static_cast<std::size_t>(d), 0)};
}

OrientedSubtorus fullTorus(int d, Side side) {
  return {d, side, IntMatrix::identity(static_cast<std::size_t>(d))};
}

OrientedSubtorus coordinateSubtorus(int d, Side side, const IndexSet& S) {
  if (!isValidIndexSet(S, d))
    fail(ErrorKind::Dimension, "coordinate set out of range");
  IntMatrix basis(static_cast<std::size_t>(d), S.size());
  for (std::size_t c = 0; c < S.size(); ++c) basis.at(static_cast<std::size_t>(S[c] - 1), c) = 1;
  return {d, side, std::move(basis)};
}

namespace {

// kernel basis of B^T with the 2-out-of-3 orientation fix; returns the
// oriented basis and the leftover sign (target/actual after the fix)
std::pair<IntMatrix, Int> orientedAnnihilator(const IntMatrix& B) {
  IntMatrix N = integerKernelBasis(B.transpose());
  IntMatrix M = dualSection(B);
  Int det = N.hstack(M).det();
  if (det < 0 && N.cols() > 0) {
    N.negateCol(0);
    det = -det;
  }
  return {std::move(N), std::move(det)};
}

// mirror convention: det([M | N]) = (-1)^k for a rank-k input
std::pair<IntMatrix, Int> mirrorOrientedAnnihilator(const IntMatrix& B) {
  IntMatrix N = integerKernelBasis(B.transpose());
  IntMatrix M = dualSection(B);
  Int target = B.cols() % 2 == 0 ? 1 : -1;
  Int det = M.hstack(N).det();
  if (det != target && N.cols() > 0) {
    N.negateCol(0);
    det = -det;
  }
  return {std::move(N), det * target}; // +1 when the fix landed
}

} // namespace

OrientedSubtorus dualSubtorus(const OrientedSubtorus& t) {
  auto [N, defect] = orientedAnnihilator(t.basis);
  return {t.d, oppositeSide(t.side), std::move(N)};
}

Int dualOrientationDefect(const OrientedSubtorus& t) {
  return orientedAnnihilator(t.basis).second;
}

OrientedSubtorus mirrorDualSubtorus(const OrientedSubtorus& t) {
  auto [N, defect] = mirrorOrientedAnnihilator(t.basis);
  return {t.d, oppositeSide(t.side), std::move(N)};
}

Int mirrorDualOrientationDefect(const OrientedSubtorus& t) {
  return mirrorOrientedAnnihilator(t.basis).second;
}

ExteriorClass expandHomology(const OrientedSubtorus& t) {
  ExteriorClass cls({t.d, Variance::Y, t.side});
  PlueckerVector minors = plueckerMinors(t.basis);
  for (const auto& [J, coeff] : minors.coefficients) cls.addTerm(J, coeff);
  return cls;
}

ExteriorClass expandKTheory(const OrientedSubtorus& t) {
  ExteriorClass cls({t.d, Variance::X, t.side});
  int k = t.dim();
  for (const IndexSet& J : subsetsOfSize(t.d, t.d - k)) {
    IntMatrix standard(static_cast<std::size_t>(t.d), J.size());
    for (std::size_t c = 0; c < J.size(); ++c)
      standard.at(static_cast<std::size_t>(J[c] - 1), c) = 1;
    cls.addTerm(J, t.basis.hstack(standard).det());
  }
  return cls;
}

Int pairingSigned(const OrientedSubtorus& t, const OrientedSubtorus& tp) {
  if (t.d != tp.d || t.side != tp.side)
    fail(ErrorKind::SpecMismatch, "pairing requires a common ambient torus");
  if (t.dim() + tp.dim() != t.d)
    fail(ErrorKind::Dimension,
         "pairing requires complementary dimensions; the exterior pairing is zero otherwise");
  return t.basis.hstack(tp.basis).det();
}

IntersectionData intersectionData(const OrientedSubtorus& t, const OrientedSubtorus& tp) {
  if (t.d != tp.d || t.side != tp.side)
    fail(ErrorKind::SpecMismatch, "intersection requires a common ambient torus");
  const IntMatrix& B = t.basis;
  const IntMatrix& Bp = tp.basis;
  IntMatrix joint = B.hstack(Bp);
  SmithDecomposition snf = smithNormalForm(joint);
  std::vector<Int> factors = snf.invariantFactors();
  IntersectionData out;
  out.transverse = factors.size() == static_cast<std::size_t>(t.d);
  out.identityComponent = trivialSubgroup(t.d, t.side);
  out.componentCount = 0;
  if (!out.transverse) return out; // flagged: no class computed
  out.componentCount = 1;
  for (const Int& f : factors) out.componentCount *= f;

  int k = t.dim(), kp = tp.dim();
  int m = k + kp - t.d;
  if (m <= 0) return out; // finite intersection, trivial component
  // tangent lattice of the identity component: image under B of the
  // kernel of [B | -B'], saturated and HNF-canonical
  IntMatrix kernel = integerKernelBasis(B.hstack(-Bp));
  std::vector<std::size_t> topRows;
  for (int r = 0; r < k; ++r) topRows.push_back(static_cast<std::size_t>(r));
  IntMatrix C = saturate(B * kernel.rowsSubset(topRows));

  // 2-out-of-3 orientation: in (B (+) B') coordinates, stack the lifts
  // of the ambient standard basis through (v,v') -> v - v' next to the
  // diagonal embedding of C, and demand a positive determinant after
  // the (-1)^{k'(m+1)} normalization calibrated on coordinate subtori
  RationalMatrix X(static_cast<std::size_t>(k + kp),
                   RationalVector(static_cast<std::size_t>(t.d + m)));
  IntMatrix differenceMap = B.hstack(-Bp);
  for (int j = 0; j < t.d; ++j) {
    RationalVector e(static_cast<std::size_t>(t.d), Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    auto z = solveLinear(differenceMap, e);
    if (!z) fail(ErrorKind::NotTransverse, "lift of ambient basis vector failed");
    for (int r = 0; r < k + kp; ++r)
      X[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = (*z)[static_cast<std::size_t>(r)];
  }
  for (int i = 0; i < m; ++i) {
    RationalVector c(static_cast<std::size_t>(t.d));
    for (int r = 0; r < t.d; ++r)
      c[static_cast<std::size_t>(r)] = Rational(C.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i)));
    auto p = solveLinear(B, c);
    auto q = solveLinear(Bp, c);
    if (!p || !q) fail(ErrorKind::Rank, "component vector does not lie on both subtori");
    for (int r = 0; r < k; ++r)
      X[static_cast<std::size_t>(r)][static_cast<std::size_t>(t.d + i)] = (*p)[static_cast<std::size_t>(r)];
    for (int r = 0; r < kp; ++r)
      X[static_cast<std::size_t>(k + r)][static_cast<std::size_t>(t.d + i)] = (*q)[static_cast<std::size_t>(r)];
  }
  int sign = detSign(X);
  if ((kp * (m + 1)) % 2 != 0) sign = -sign;
  if (sign < 0) C.negateCol(0);
  out.identityComponent = {t.d, t.side, std::move(C)};
  return out;
}

} // namespace toruskk
