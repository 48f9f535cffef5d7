#pragma once

#include "toruskk/int_matrix.hpp"

namespace toruskk {

// Column-style Hermite normal form: A * U = H with U unimodular.
// H is in column echelon form, zero columns last; pivot entries are
// positive and the entries left of a pivot in its row lie in [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0; // number of nonzero columns of H
};

HermiteDecomposition hermiteNormalForm(const IntMatrix& A);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// d1 | d2 | ... | dr >= 1 followed by zeros.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Int> invariantFactors() const;
};

SmithDecomposition smithNormalForm(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

// the unique HNF basis of the column lattice of A (zero columns dropped)
IntMatrix canonicalLatticeBasis(const IntMatrix& A);

} // namespace toruskk
