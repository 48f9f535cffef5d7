#pragma once

#include "toruskk/exterior.hpp"

namespace toruskk {

// Exact integer-linear map between the monomial bases of two exterior
// algebras. Row/column indices follow the canonical monomial order
// (size, then lex). No grading is assumed; degree behavior is a checked
// property, and degreeShift is bookkeeping for the induced KK-degree.
class GradedLinearMap {
public:
  GradedLinearMap(AlgebraSpec source, AlgebraSpec target, int degreeShift);

  static GradedLinearMap identity(AlgebraSpec spec);
  static GradedLinearMap zero(AlgebraSpec source, AlgebraSpec target, int degreeShift = 0);

  const AlgebraSpec& sourceSpec() const { return source_; }
  const AlgebraSpec& targetSpec() const { return target_; }
  int degreeShift() const { return degreeShift_; }

  const std::vector<IndexSet>& sourceMonomials() const { return sourceMonomials_; }
  const std::vector<IndexSet>& targetMonomials() const { return targetMonomials_; }

  // matrix entries: rows = target monomials, cols = source monomials
  const IntMatrix& matrix() const { return matrix_; }

  void setImage(const IndexSet& sourceMonomial, const ExteriorClass& image);
  ExteriorClass image(const IndexSet& sourceMonomial) const;

  bool operator==(const GradedLinearMap&) const = default;

private:
  std::size_t sourceRank(const IndexSet& m) const;

  AlgebraSpec source_, target_;
  int degreeShift_;
  std::vector<IndexSet> sourceMonomials_, targetMonomials_;
  IntMatrix matrix_;
};

ExteriorClass applyMap(const GradedLinearMap& m, const ExteriorClass& a);

// g after f, exact
GradedLinearMap composeMaps(const GradedLinearMap& g, const GradedLinearMap& f);

// exact inverse; fails with a not-invertible error unless the matrix is
// unimodular over the integers
GradedLinearMap invertMap(const GradedLinearMap& f);

// true iff every column has exactly one nonzero entry, and it is +-1 at
// the complementary index set
bool isSignedComplementPermutation(const GradedLinearMap& m);

} // namespace toruskk
