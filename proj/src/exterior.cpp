#include "toruskk/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace toruskk {

const char* varianceName(Variance v) { return v == Variance::X ? "x" : "y"; }
const char* sideName(Side s) { return s == Side::Base ? "base" : "dual"; }
Side oppositeSide(Side s) { return s == Side::Base ? Side::Dual : Side::Base; }

std::string AlgebraSpec::describe() const {
  std::ostringstream out;
  out << "Lambda*" << varianceName(variance) << "(d=" << d << ", " << sideName(side) << ")";
  return out.str();
}

ExteriorClass ExteriorClass::monomial(AlgebraSpec spec, const IndexSet& idx, Int coeff) {
  ExteriorClass c(spec);
  c.addTerm(idx, coeff);
  return c;
}

Int ExteriorClass::coefficient(const IndexSet& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Int(0) : it->second;
}

void ExteriorClass::addTerm(const IndexSet& idx, const Int& coeff) {
  if (!isValidIndexSet(idx, spec_.d))
    fail(ErrorKind::Dimension, "index set out of range for rank " + std::to_string(spec_.d));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExteriorClass ExteriorClass::operator+(const ExteriorClass& rhs) const {
  if (spec_ != rhs.spec_)
    fail(ErrorKind::SpecMismatch, "cannot add classes in different algebras");
  ExteriorClass sum = *this;
  for (const auto& [idx, c] : rhs.terms_) sum.addTerm(idx, c);
  return sum;
}

ExteriorClass ExteriorClass::operator-(const ExteriorClass& rhs) const { return *this + (-rhs); }

ExteriorClass ExteriorClass::operator-() const {
  ExteriorClass neg(spec_);
  for (const auto& [idx, c] : terms_) neg.terms_.emplace(idx, -c);
  return neg;
}

ExteriorClass ExteriorClass::operator*(const Int& scalar) const {
  ExteriorClass scaled(spec_);
  if (scalar == 0) return scaled;
  for (const auto& [idx, c] : terms_) scaled.terms_.emplace(idx, scalar * c);
  return scaled;
}

int ExteriorClass::pureGrade() const {
  if (terms_.empty()) return -1;
  std::size_t g = terms_.begin()->first.size();
  for (const auto& [idx, c] : terms_)
    if (idx.size() != g) return -1;
  return static_cast<int>(g);
}

std::string ExteriorClass::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) out << a << "*";
    out << varianceName(spec_.variance) << "[";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out << ",";
      out << idx[i];
    }
    out << "]";
  }
  return out.str();
}

ExteriorClass wedge(const ExteriorClass& a, const ExteriorClass& b) {
  if (a.spec() != b.spec())
    fail(ErrorKind::SpecMismatch, "wedge requires a common ambient algebra: " +
                                      a.spec().describe() + " vs " + b.spec().describe());
  ExteriorClass prod(a.spec());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      int sign = mergeSign(ia, ib);
      if (sign == 0) continue;
      IndexSet merged;
      merged.reserve(ia.size() + ib.size());
      std::merge(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(merged));
      prod.addTerm(merged, Int(sign) * ca * cb);
    }
  }
  return prod;
}

Int pairKH(const ExteriorClass& a, const ExteriorClass& b) {
  if (a.spec().variance != Variance::X || b.spec().variance != Variance::Y)
    fail(ErrorKind::Variance, "pairing takes an x-type class and a y-type class");
  if (a.spec().d != b.spec().d || a.spec().side != b.spec().side)
    fail(ErrorKind::SpecMismatch, "pairing requires common rank and side");
  Int total = 0;
  for (const auto& [idx, ca] : a.terms()) total += ca * b.coefficient(idx);
  return total;
}

} // namespace toruskk
