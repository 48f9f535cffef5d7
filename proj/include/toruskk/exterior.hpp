#pragma once

#include <map>
#include <string>

#include "toruskk/int_matrix.hpp"
#include "toruskk/subsets.hpp"

namespace toruskk {

// x-type classes live in the K-theory model, y-type in the K-homology one
enum class Variance { X, Y };
// which torus the class sits on: the base torus or its Pontryagin dual
enum class Side { Base, Dual };

const char* varianceName(Variance v);
const char* sideName(Side s);
Side oppositeSide(Side s);

struct AlgebraSpec {
  int d = 0;
  Variance variance = Variance::X;
  Side side = Side::Base;

  bool operator==(const AlgebraSpec&) const = default;
  std::string describe() const;
};

// Finitely supported integer combination of monomials x_I (or y_I) in an
// exterior algebra of rank d. Mixed grades are allowed; the grade of a
// term is the size of its index set. Zero coefficients are never stored.
class ExteriorClass {
public:
  ExteriorClass() = default;
  explicit ExteriorClass(AlgebraSpec spec) : spec_(spec) {}

  static ExteriorClass monomial(AlgebraSpec spec, const IndexSet& idx, Int coeff = 1);

  const AlgebraSpec& spec() const { return spec_; }
  const std::map<IndexSet, Int, SubsetOrder>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  Int coefficient(const IndexSet& idx) const;
  void addTerm(const IndexSet& idx, const Int& coeff); // checks validity, drops zeros

  ExteriorClass operator+(const ExteriorClass& rhs) const;
  ExteriorClass operator-(const ExteriorClass& rhs) const;
  ExteriorClass operator-() const;
  ExteriorClass operator*(const Int& scalar) const;
  bool operator==(const ExteriorClass&) const = default;

  // -1 for the zero class or a mixed-grade class, else the common grade
  int pureGrade() const;

  std::string describe() const; // short human form, e.g. "x[1] - x[1,2]"

private:
  AlgebraSpec spec_;
  std::map<IndexSet, Int, SubsetOrder> terms_;
};

// bilinear wedge with x_I ^ x_J = sign of the merging shuffle, 0 on overlap
ExteriorClass wedge(const ExteriorClass& a, const ExteriorClass& b);

// K-theory/K-homology pairing: <x_I, y_J> = [I == J], extended bilinearly.
// a must be x-type and b y-type on the same side and rank.
Int pairKH(const ExteriorClass& a, const ExteriorClass& b);

} // namespace toruskk
