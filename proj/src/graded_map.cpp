#include "toruskk/graded_map.hpp"

#include "toruskk/normal_form.hpp"

namespace toruskk {

GradedLinearMap::GradedLinearMap(AlgebraSpec source, AlgebraSpec target, int degreeShift)
    : source_(source),
      target_(target),
      degreeShift_(degreeShift),
      sourceMonomials_(allSubsets(source.d)),
      targetMonomials_(allSubsets(target.d)),
      matrix_(targetMonomials_.size(), sourceMonomials_.size()) {}

GradedLinearMap GradedLinearMap::identity(AlgebraSpec spec) {
  GradedLinearMap m(spec, spec, 0);
  m.matrix_ = IntMatrix::identity(m.sourceMonomials_.size());
  return m;
}

GradedLinearMap GradedLinearMap::zero(AlgebraSpec source, AlgebraSpec target, int degreeShift) {
  return GradedLinearMap(source, target, degreeShift);
}

std::size_t GradedLinearMap::sourceRank(const IndexSet& m) const {
  SubsetOrder less;
  std::size_t lo = 0, hi = sourceMonomials_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (less(sourceMonomials_[mid], m))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == sourceMonomials_.size() || sourceMonomials_[lo] != m)
    fail(ErrorKind::Dimension, "monomial outside the source basis");
  return lo;
}

void GradedLinearMap::setImage(const IndexSet& sourceMonomial, const ExteriorClass& image) {
  if (image.spec() != target_)
    fail(ErrorKind::SpecMismatch, "image lives in " + image.spec().describe() +
                                      ", expected " + target_.describe());
  std::size_t col = sourceRank(sourceMonomial);
  for (std::size_t r = 0; r < targetMonomials_.size(); ++r) matrix_.at(r, col) = 0;
  std::size_t r = 0;
  for (const auto& [idx, c] : image.terms()) {
    while (targetMonomials_[r] != idx) ++r; // both run in canonical order
    matrix_.at(r, col) = c;
  }
}

ExteriorClass GradedLinearMap::image(const IndexSet& sourceMonomial) const {
  std::size_t col = sourceRank(sourceMonomial);
  ExteriorClass out(target_);
  for (std::size_t r = 0; r < targetMonomials_.size(); ++r)
    out.addTerm(targetMonomials_[r], matrix_.at(r, col));
  return out;
}

ExteriorClass applyMap(const GradedLinearMap& m, const ExteriorClass& a) {
  if (a.spec() != m.sourceSpec())
    fail(ErrorKind::SpecMismatch, "class lives in " + a.spec().describe() +
                                      ", map expects " + m.sourceSpec().describe());
  ExteriorClass out(m.targetSpec());
  const auto& srcMon = m.sourceMonomials();
  const auto& tgtMon = m.targetMonomials();
  std::size_t col = 0;
  for (const auto& [idx, c] : a.terms()) {
    while (srcMon[col] != idx) ++col; // terms are already in canonical order
    for (std::size_t r = 0; r < tgtMon.size(); ++r) {
      const Int& e = m.matrix().at(r, col);
      if (e != 0) out.addTerm(tgtMon[r], e * c);
    }
  }
  return out;
}

GradedLinearMap composeMaps(const GradedLinearMap& g, const GradedLinearMap& f) {
  if (f.targetSpec() != g.sourceSpec())
    fail(ErrorKind::SpecMismatch, "maps are not composable: " + f.targetSpec().describe() +
                                      " vs " + g.sourceSpec().describe());
  GradedLinearMap out(f.sourceSpec(), g.targetSpec(), f.degreeShift() + g.degreeShift());
  IntMatrix product = g.matrix() * f.matrix();
  const auto& tgtMon = out.targetMonomials();
  for (std::size_t c = 0; c < out.sourceMonomials().size(); ++c) {
    ExteriorClass img(g.targetSpec());
    for (std::size_t r = 0; r < tgtMon.size(); ++r) img.addTerm(tgtMon[r], product.at(r, c));
    out.setImage(out.sourceMonomials()[c], img);
  }
  return out;
}

GradedLinearMap invertMap(const GradedLinearMap& f) {
  if (f.matrix().rows() != f.matrix().cols())
    fail(ErrorKind::NotInvertible, "map matrix is not square");
  // column HNF of a unimodular matrix is the identity, so T*U = I gives
  // the exact inverse; any other H certifies non-unimodularity
  HermiteDecomposition hnf = hermiteNormalForm(f.matrix());
  if (!hnf.H.isIdentity())
    fail(ErrorKind::NotInvertible, "map matrix is not unimodular over the integers");
  GradedLinearMap inv(f.targetSpec(), f.sourceSpec(), -f.degreeShift());
  const auto& tgtMon = inv.targetMonomials();
  for (std::size_t c = 0; c < inv.sourceMonomials().size(); ++c) {
    ExteriorClass img(inv.targetSpec());
    for (std::size_t r = 0; r < tgtMon.size(); ++r) img.addTerm(tgtMon[r], hnf.U.at(r, c));
    inv.setImage(inv.sourceMonomials()[c], img);
  }
  return inv;
}

bool isSignedComplementPermutation(const GradedLinearMap& m) {
  if (m.sourceSpec().d != m.targetSpec().d) return false;
  int d = m.sourceSpec().d;
  const auto& src = m.sourceMonomials();
  const auto& tgt = m.targetMonomials();
  for (std::size_t c = 0; c < src.size(); ++c) {
    IndexSet comp = complementSet(src[c], d);
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      const Int& e = m.matrix().at(r, c);
      if (tgt[r] == comp) {
        if (e != 1 && e != -1) return false;
      } else if (e != 0) {
        return false;
      }
    }
  }
  return true;
}

} // namespace toruskk
