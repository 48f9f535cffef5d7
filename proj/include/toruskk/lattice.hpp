#pragma once

#include <map>

#include "toruskk/normal_form.hpp"
#include "toruskk/subsets.hpp"

namespace toruskk {

// true iff the columns of B span a direct summand of Z^d of full column
// rank, i.e. rank(B) = cols(B) and every Smith invariant factor is 1
bool isPrimitiveBasis(const IntMatrix& B);

// primitive basis of (R*B) intersected with Z^d; requires full column rank.
// Output is HNF-canonical, so saturate is idempotent.
IntMatrix saturate(const IntMatrix& B);

// canonical primitive basis of { v : A*v = 0 }
IntMatrix integerKernelBasis(const IntMatrix& A);

// integer M with B^T * M = I_k; exists iff B is primitive
IntMatrix dualSection(const IntMatrix& B);

// all maximal minors of a d x k basis matrix, indexed by row subsets
struct PlueckerVector {
  int d = 0;
  int k = 0;
  std::map<IndexSet, Int, SubsetOrder> coefficients;

  bool operator==(const PlueckerVector&) const = default;
};

PlueckerVector plueckerMinors(const IntMatrix& B);

} // namespace toruskk
