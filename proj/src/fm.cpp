#include "toruskk/fm.hpp"

#include <sstream>

namespace toruskk {

int fmSignKTheory(int k, int d) {
  long long exponent = static_cast<long long>(k) * (d - k) + static_cast<long long>(k) * (k - 1) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

int fmSignKHomology(int k, int d) {
  long long exponent = static_cast<long long>(k) * d + static_cast<long long>(k) * (k - 1) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

namespace {

GradedLinearMap buildFMKFrom(int d, Side source) {
  if (d < 1) fail(ErrorKind::Dimension, "d must be >= 1");
  GradedLinearMap fm({d, Variance::X, source}, {d, Variance::X, oppositeSide(source)}, -d);
  for (const IndexSet& S : allSubsets(d)) {
    OrientedSubtorus torus = coordinateSubtorus(d, source, S);
    // expandKTheory(T_S) = merge-sign(S, S^c) * x_{S^c}; solve for the
    // image of the bare monomial
    int unitSign = mergeSign(S, complementSet(S, d));
    ExteriorClass image =
        expandKTheory(dualSubtorus(torus)) *
        Int(unitSign * fmSignKTheory(static_cast<int>(S.size()), d));
    fm.setImage(complementSet(S, d), image);
  }
  return fm;
}

} // namespace

GradedLinearMap buildFMK(int d) { return buildFMKFrom(d, Side::Base); }

GradedLinearMap buildFMKReversed(int d) { return buildFMKFrom(d, Side::Dual); }

GradedLinearMap buildFMH(int d) {
  if (d < 1) fail(ErrorKind::Dimension, "d must be >= 1");
  GradedLinearMap fm({d, Variance::Y, Side::Dual}, {d, Variance::Y, Side::Base}, -d);
  for (const IndexSet& S : allSubsets(d)) {
    // expandHomology of a coordinate subtorus is exactly y_S; the
    // homology direction dualizes with the mirror orientation
    OrientedSubtorus torus = coordinateSubtorus(d, Side::Dual, S);
    ExteriorClass image = expandHomology(mirrorDualSubtorus(torus)) *
                          (Int(fmSignKHomology(static_cast<int>(S.size()), d)) *
                           mirrorDualOrientationDefect(torus));
    fm.setImage(S, image);
  }
  return fm;
}

GradedLinearMap buildPDspin(int d) {
  if (d < 1) fail(ErrorKind::Dimension, "d must be >= 1");
  GradedLinearMap pd({d, Variance::Y, Side::Base}, {d, Variance::X, Side::Base}, d);
  for (const IndexSet& S : allSubsets(d))
    pd.setImage(S, expandKTheory(coordinateSubtorus(d, Side::Base, S)));
  return pd;
}

GradedLinearMap buildAssembly(int d) { return composeMaps(buildFMK(d), buildPDspin(d)); }

ExteriorClass assemblyOnSubtorus(const OrientedSubtorus& t) {
  if (t.side != Side::Base)
    fail(ErrorKind::SpecMismatch, "assembly acts on base-side subtori");
  ExteriorClass image = applyMap(buildAssembly(t.d), expandHomology(t));
  ExteriorClass geometric = expandKTheory(dualSubtorus(t)) *
                            (Int(fmSignKTheory(t.dim(), t.d)) * dualOrientationDefect(t));
  if (image != geometric)
    fail(ErrorKind::SpecMismatch,
         "assembly postcondition violated: mu(expandHomology) = " + image.describe() +
             " but the dual-subtorus form gives " + geometric.describe());
  return image;
}

namespace {

PropertyResult checkEqual(const std::string& name, const ExteriorClass& lhs,
                          const ExteriorClass& rhs, const std::string& context) {
  PropertyResult r{name, lhs == rhs, 1, ""};
  if (!r.pass)
    r.counterexample = context + " lhs=" + lhs.describe() + " rhs=" + rhs.describe();
  return r;
}

} // namespace

VerifyReport adjointnessCheck(int d) {
  GradedLinearMap fmk = buildFMK(d);
  GradedLinearMap fmh = buildFMH(d);
  AlgebraSpec xBase{d, Variance::X, Side::Base};
  AlgebraSpec yDual{d, Variance::Y, Side::Dual};
  PropertyResult result{"fm-adjointness", true, 0, ""};
  for (const IndexSet& I : allSubsets(d)) {
    ExteriorClass a = ExteriorClass::monomial(xBase, I);
    ExteriorClass fa = applyMap(fmk, a);
    for (const IndexSet& J : allSubsets(d)) {
      ExteriorClass b = ExteriorClass::monomial(yDual, J);
      Int lhs = pairKH(fa, b);
      Int rhs = pairKH(a, applyMap(fmh, b));
      ++result.checks;
      if (lhs != rhs && result.pass) {
        result.pass = false;
        std::ostringstream msg;
        msg << "d=" << d << " a=" << a.describe() << " b=" << b.describe() << " <FMK a,b>=" << lhs
            << " <a,FMH b>=" << rhs;
        result.counterexample = msg.str();
      }
    }
  }
  VerifyReport report;
  report.d = d;
  report.properties.push_back(std::move(result));
  return report;
}

namespace {

// anti-diagonal z -> (zbar, z): columns (-e_i, e_i); diagonal: (e_i, e_i)
IntMatrix antiDiagonalBasis(int d) {
  IntMatrix b(static_cast<std::size_t>(2 * d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = -1;
    b.at(static_cast<std::size_t>(d + i), static_cast<std::size_t>(i)) = 1;
  }
  return b;
}

IntMatrix diagonalBasis(int d) {
  IntMatrix b(static_cast<std::size_t>(2 * d), static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    b.at(static_cast<std::size_t>(d + i), static_cast<std::size_t>(i)) = 1;
  }
  return b;
}

int halfTwistSign(int d) { return (static_cast<long long>(d) * (d - 1) / 2) % 2 == 0 ? 1 : -1; }

} // namespace

VerifyReport exampleInvertTorus(int d) {
  int ambient = 2 * d;
  OrientedSubtorus anti = makeSubtorus(ambient, Side::Base, antiDiagonalBasis(d));
  OrientedSubtorus diag = makeSubtorus(ambient, Side::Dual, diagonalBasis(d));
  ExteriorClass lhs = applyMap(buildFMK(ambient), expandKTheory(anti));
  int sign = (d % 2 == 0 ? 1 : -1) * halfTwistSign(d);
  ExteriorClass rhs = expandKTheory(diag) * Int(sign);
  VerifyReport report;
  report.d = d;
  std::ostringstream ctx;
  ctx << "ambient=" << ambient << " sign=" << sign;
  report.properties.push_back(checkEqual("fm-invert-torus", lhs, rhs, ctx.str()));
  return report;
}

VerifyReport exampleInvertDual(int d) {
  int ambient = 2 * d;
  OrientedSubtorus anti = makeSubtorus(ambient, Side::Dual, antiDiagonalBasis(d));
  OrientedSubtorus diag = makeSubtorus(ambient, Side::Base, diagonalBasis(d));
  ExteriorClass lhs = applyMap(buildFMH(ambient), expandHomology(anti));
  ExteriorClass rhs = expandHomology(diag) * Int(halfTwistSign(d));
  VerifyReport report;
  report.d = d;
  std::ostringstream ctx;
  ctx << "ambient=" << ambient << " sign=" << halfTwistSign(d);
  report.properties.push_back(checkEqual("fm-invert-dual", lhs, rhs, ctx.str()));
  return report;
}

VerifyReport fmInverseStructure(int d) {
  VerifyReport report;
  report.d = d;
  PropertyResult result{"fm-inverse-structure", true, 0, ""};
  GradedLinearMap fmk = buildFMK(d);
  try {
    GradedLinearMap inv = invertMap(fmk);
    ++result.checks;
    if (!isSignedComplementPermutation(inv)) {
      result.pass = false;
      result.counterexample = "inverse is not a signed complement-permutation";
    }
    ++result.checks;
    if (result.pass && !composeMaps(inv, fmk).matrix().isIdentity()) {
      result.pass = false;
      result.counterexample = "inverse o map != identity";
    }
    ++result.checks;
    if (result.pass && !composeMaps(fmk, inv).matrix().isIdentity()) {
      result.pass = false;
      result.counterexample = "map o inverse != identity";
    }
  } catch (const Error& e) {
    result.pass = false;
    result.counterexample = std::string("invertMap failed: ") + e.what() +
                            " matrix=" + fmk.matrix().toText();
  }
  report.properties.push_back(std::move(result));
  return report;
}

} // namespace toruskk
