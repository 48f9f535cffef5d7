#include "toruskk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "toruskk/rational_solve.hpp"

namespace toruskk {

std::string TorusPoint::describe() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ", ";
    out << coords[i];
  }
  out << ")";
  return out.str();
}

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Dimension, "empty draw range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

long long SeededRng::range(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 round over seed xor salt
  std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Rational fractionalPart(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

bool isIntegral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

} // namespace

bool containsPoint(const OrientedSubtorus& t, const TorusPoint& p) {
  if (p.d != t.d) fail(ErrorKind::Dimension, "point and subtorus dimension mismatch");
  // x lies on T iff every integer functional annihilating the tangent
  // lattice takes an integer value at x
  IntMatrix ann = integerKernelBasis(t.basis.transpose());
  for (std::size_t c = 0; c < ann.cols(); ++c) {
    Rational value = 0;
    for (int r = 0; r < t.d; ++r)
      value += Rational(ann.at(static_cast<std::size_t>(r), c)) * p.coords[static_cast<std::size_t>(r)];
    if (!isIntegral(value)) return false;
  }
  return true;
}

std::vector<TorusPoint> enumerateIntersection(const OrientedSubtorus& t,
                                              const OrientedSubtorus& tp) {
  if (t.d != tp.d || t.side != tp.side)
    fail(ErrorKind::SpecMismatch, "intersection requires a common ambient torus");
  int d = t.d;
  int k = t.dim(), kp = tp.dim();
  if (k + kp != d)
    fail(ErrorKind::Dimension, "enumeration requires complementary dimensions");
  IntMatrix relation = t.basis.hstack(-tp.basis); // d x d
  SmithDecomposition snf = smithNormalForm(relation);
  if (snf.invariantFactors().size() != static_cast<std::size_t>(d))
    fail(ErrorKind::NotTransverse, "subtori are not transverse");

  // solutions of relation * z = 0 (mod Z^d) form V * D^{-1} * Z^d in
  // parameter space; distinct residues r in prod [0, D_i) give the
  // distinct intersection points B * a mod Z^d
  std::vector<Int> diag;
  for (int i = 0; i < d; ++i)
    diag.push_back(snf.D.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));

  std::set<TorusPoint> points;
  std::vector<Int> residue(static_cast<std::size_t>(d), 0);
  for (;;) {
    // solution lattice = V D^{-1} Z^d, containing Z^d = V D^{-1} (D Z^d);
    // so z = V D^{-1} r over residues r mod D runs over the cosets once
    RationalVector z(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      Rational acc = 0;
      for (int c = 0; c < d; ++c)
        acc += Rational(snf.V.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) *
               Rational(residue[static_cast<std::size_t>(c)], diag[static_cast<std::size_t>(c)]);
      z[static_cast<std::size_t>(r)] = acc;
    }
    TorusPoint p;
    p.d = d;
    p.coords.resize(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
      Rational coord = 0;
      for (int c = 0; c < k; ++c)
        coord += Rational(t.basis.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) *
                 z[static_cast<std::size_t>(c)];
      p.coords[static_cast<std::size_t>(r)] = fractionalPart(coord);
    }
    points.insert(std::move(p));
    // advance the mixed-radix residue counter
    int pos = 0;
    while (pos < d) {
      residue[static_cast<std::size_t>(pos)] += 1;
      if (residue[static_cast<std::size_t>(pos)] < diag[static_cast<std::size_t>(pos)]) break;
      residue[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  return {points.begin(), points.end()};
}

std::vector<TorusPoint> gridEnumerateIntersection(const OrientedSubtorus& t,
                                                  const OrientedSubtorus& tp,
                                                  int maxDenominator) {
  if (t.d != tp.d || t.side != tp.side)
    fail(ErrorKind::SpecMismatch, "intersection requires a common ambient torus");
  std::vector<Rational> ticks;
  for (int den = 1; den <= maxDenominator; ++den)
    for (int num = 0; num < den; ++num) {
      Rational q(num, den);
      if (boost::multiprecision::denominator(q) == den) ticks.push_back(q);
    }
  std::sort(ticks.begin(), ticks.end());
  std::set<TorusPoint> points;
  std::vector<std::size_t> cursor(static_cast<std::size_t>(t.d), 0);
  for (;;) {
    TorusPoint p;
    p.d = t.d;
    for (std::size_t i = 0; i < cursor.size(); ++i) p.coords.push_back(ticks[cursor[i]]);
    if (containsPoint(t, p) && containsPoint(tp, p)) points.insert(std::move(p));
    std::size_t pos = 0;
    while (pos < cursor.size()) {
      if (++cursor[pos] < ticks.size()) break;
      cursor[pos] = 0;
      ++pos;
    }
    if (pos == cursor.size()) break;
  }
  return {points.begin(), points.end()};
}

IntMatrix randomUnimodular(int d, int entryBound, SeededRng& rng) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(d));
  if (d < 2) return m;
  int shearBound = std::max(1, std::min(entryBound, 2));
  int ops = 2 * d;
  for (int i = 0; i < ops; ++i) {
    std::size_t a = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d)));
    std::size_t b = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d - 1)));
    if (b >= a) ++b;
    switch (rng.below(3)) {
      case 0:
      case 1: {
        long long c = rng.range(1, shearBound);
        if (rng.below(2)) c = -c;
        m.addColMultiple(a, b, Int(c));
        break;
      }
      default: {
        // quarter-turn in the (a,b) plane keeps the determinant +1
        m.swapCols(a, b);
        m.negateCol(a);
        break;
      }
    }
  }
  return m;
}

OrientedSubtorus randomPrimitiveSubtorus(int d, int k, Side side, SeededRng& rng,
                                         int entryBound) {
  if (k < 0 || k > d) fail(ErrorKind::Dimension, "subtorus dimension out of range");
  std::vector<std::size_t> first;
  for (int c = 0; c < k; ++c) first.push_back(static_cast<std::size_t>(c));
  IntMatrix basis(static_cast<std::size_t>(d), static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < 64; ++attempt) {
    basis = randomUnimodular(d, entryBound, rng).columns(first);
    Int maxAbs = 0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < k; ++c) {
        Int v = basis.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        if (v < 0) v = -v;
        if (v > maxAbs) maxAbs = v;
      }
    if (maxAbs <= entryBound) break;
  }
  return {d, side, std::move(basis)};
}

OrientedSubtorus randomPrimitiveSubtorus(int d, int k, const RandomSpec& spec) {
  SeededRng rng(spec.seed);
  return randomPrimitiveSubtorus(d, k, Side::Base, rng, spec.entryBound);
}

} // namespace toruskk
