#pragma once

#include "toruskk/exterior.hpp"
#include "toruskk/lattice.hpp"

namespace toruskk {

// Closed connected subgroup of the d-torus (or of its Pontryagin dual),
// encoded by a primitive integer basis of its tangent lattice. The
// orientation is the column order; a valid basis always has
// isPrimitiveBasis(basis) true.
struct OrientedSubtorus {
  int d = 0;
  Side side = Side::Base;
  IntMatrix basis; // d x k, primitive

  int dim() const { return static_cast<int>(basis.cols()); }
  bool operator==(const OrientedSubtorus&) const = default;
};

// validates: d rows, full column rank, primitive
OrientedSubtorus makeSubtorus(int d, Side side, IntMatrix basis);

OrientedSubtorus trivialSubgroup(int d, Side side);
OrientedSubtorus fullTorus(int d, Side side);
// coordinate subtorus spanned by the standard vectors indexed by S, ascending
OrientedSubtorus coordinateSubtorus(int d, Side side, const IndexSet& S);

// Pontryagin-dual subtorus on the opposite side: its basis N spans the
// annihilator { v : B^T v = 0 }, oriented so that det([N | M]) = +1 for
// the integer section M with B^T M = I (first column of N flipped when
// needed). For a full-rank basis there is no column to flip; the
// leftover sign is reported by dualOrientationDefect.
OrientedSubtorus dualSubtorus(const OrientedSubtorus& t);

// det([N | M]) after the fix: +1 except for a negatively oriented
// rank-d subtorus, whose dual is a point and cannot carry the sign
Int dualOrientationDefect(const OrientedSubtorus& t);

// Homology-side dual, the mirror of dualSubtorus: same annihilator
// lattice, but oriented contravariantly by det([M | N]) = (-1)^k. The
// two conventions differ by (-1)^{k(d-k+1)}; this one makes the
// K-homology transform the exact adjoint of the K-theory transform
// under the monomial pairing.
OrientedSubtorus mirrorDualSubtorus(const OrientedSubtorus& t);

// +-1; differs from +1 only when no kernel column can carry the
// orientation (rank 0 or rank d input)
Int mirrorDualOrientationDefect(const OrientedSubtorus& t);

// K-homology class: coefficient of y_J = det(rows J of basis); grade k
ExteriorClass expandHomology(const OrientedSubtorus& t);

// K-theory class: coefficient of x_J = det([basis | E_J]); grade d-k
ExteriorClass expandKTheory(const OrientedSubtorus& t);

// det([B | B']) for complementary dimensions; |value| is the number of
// intersection points
Int pairingSigned(const OrientedSubtorus& t, const OrientedSubtorus& tp);

struct IntersectionData {
  bool transverse = false;
  OrientedSubtorus identityComponent;
  Int componentCount; // [Z^d : sum of the two tangent lattices]
};

// Transversality, the oriented identity component of the intersection
// and the component count. The component is oriented by the 2-out-of-3
// convention calibrated on coordinate subtori, where
//   wedge(expandKTheory(t), expandKTheory(t')) = expandKTheory(component)
// holds exactly for connected transverse intersections.
IntersectionData intersectionData(const OrientedSubtorus& t, const OrientedSubtorus& tp);

} // namespace toruskk
