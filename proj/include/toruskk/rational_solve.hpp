#pragma once

#include <optional>
#include <vector>

#include "toruskk/int_matrix.hpp"

namespace toruskk {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>; // row-major

// one exact solution of A x = b, free variables set to zero; empty if
// the system is inconsistent
std::optional<RationalVector> solveLinear(const IntMatrix& A, const RationalVector& b);

// sign of the determinant of a square rational matrix: -1, 0 or +1
int detSign(RationalMatrix m);

} // namespace toruskk
