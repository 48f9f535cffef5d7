// Integration acceptance suite. Every check is exact integer arithmetic
// with zero tolerance; one line per criterion.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "toruskk/json_io.hpp"
#include "toruskk/verify.hpp"

using namespace toruskk;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int number, const std::string& name, bool pass, const std::string& info = "") {
  std::cout << "criterion " << number << " (" << name << "): " << (pass ? "pass" : "FAIL");
  if (!info.empty()) std::cout << " [" << info << "]";
  std::cout << "\n";
  if (!pass) {
    ++failures;
    if (detail.tellp() > 0) std::cout << detail.str();
  }
  detail.str("");
}

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// criterion 1: K-theory transform theorem, exhaustive coordinate plus
// 200 random primitive subtori per d in 1..5, runtime under 10 s
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  for (int d = 1; d <= 5 && pass; ++d) {
    GradedLinearMap fmk = buildFMK(d);
    SeededRng rng(mixSeed(1001, static_cast<std::uint64_t>(d)));
    auto checkOne = [&](const OrientedSubtorus& t) {
      ExteriorClass lhs = applyMap(fmk, expandKTheory(t));
      ExteriorClass rhs = expandKTheory(dualSubtorus(t)) * Int(fmSignKTheory(t.dim(), d));
      if (lhs != rhs) {
        pass = false;
        detail << "  d=" << d << " basis=" << t.basis.toText() << " lhs=" << lhs.describe()
               << " rhs=" << rhs.describe() << "\n";
      }
    };
    for (const IndexSet& S : allSubsets(d)) checkOne(coordinateSubtorus(d, Side::Base, S));
    for (int trial = 0; trial < 200 && pass; ++trial)
      checkOne(randomPrimitiveSubtorus(d, trial % (d + 1), Side::Base, rng, 4));
  }
  double t = seconds(start);
  std::ostringstream info;
  info.precision(2);
  info << std::fixed << t << "s";
  report(1, "K-theory transform theorem", pass && t < 10.0, info.str());
}

// criterion 2: K-homology mirror theorem at the same scale
void criterion2() {
  bool pass = true;
  for (int d = 1; d <= 5 && pass; ++d) {
    GradedLinearMap fmh = buildFMH(d);
    SeededRng rng(mixSeed(1002, static_cast<std::uint64_t>(d)));
    auto checkOne = [&](const OrientedSubtorus& t) {
      ExteriorClass lhs = applyMap(fmh, expandHomology(t));
      ExteriorClass rhs =
          expandHomology(mirrorDualSubtorus(t)) *
          (Int(fmSignKHomology(t.dim(), d)) * mirrorDualOrientationDefect(t));
      if (lhs != rhs) {
        pass = false;
        detail << "  d=" << d << " basis=" << t.basis.toText() << "\n";
      }
    };
    for (const IndexSet& S : allSubsets(d)) checkOne(coordinateSubtorus(d, Side::Dual, S));
    for (int trial = 0; trial < 200 && pass; ++trial)
      checkOne(randomPrimitiveSubtorus(d, trial % (d + 1), Side::Dual, rng, 4));
  }
  report(2, "K-homology transform theorem", pass);
}

// criterion 3: adjointness of the two transforms, exhaustive monomial
// pairs for d <= 5
void criterion3() {
  bool pass = true;
  for (int d = 1; d <= 5 && pass; ++d) {
    VerifyReport r = adjointnessCheck(d);
    if (!r.allPass()) {
      pass = false;
      detail << "  " << r.properties.front().counterexample << "\n";
    }
  }
  report(3, "transform adjointness", pass);
}

// criterion 4: FM invertibility for d <= 6 with signed
// complement-permutation inverse and exact round trips
void criterion4() {
  bool pass = true;
  for (int d = 1; d <= 6 && pass; ++d) {
    VerifyReport r = fmInverseStructure(d);
    if (!r.allPass()) {
      pass = false;
      detail << "  d=" << d << " " << r.properties.front().counterexample << "\n";
    }
  }
  report(4, "FM invertibility", pass);
}

// criterion 5: anti-diagonal/diagonal inversion identities, d in {1,2}
void criterion5() {
  bool pass = true;
  for (int d = 1; d <= 2 && pass; ++d) {
    VerifyReport torus = exampleInvertTorus(d);
    VerifyReport dual = exampleInvertDual(d);
    if (!torus.allPass() || !dual.allPass()) {
      pass = false;
      detail << "  d=" << d << "\n";
    }
  }
  report(5, "inversion examples", pass);
}

// criterion 6: |signed pairing| equals the enumerated point count on at
// least 500 random complementary transverse pairs, d <= 4, entries
// within 4, runtime under 30 s
void criterion6() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  long long done = 0;
  for (int d = 1; d <= 4; ++d) {
    SeededRng rng(mixSeed(1006, static_cast<std::uint64_t>(d)));
    long long target = 150, attempts = 0;
    while (target > 0 && attempts < 20000 && pass) {
      ++attempts;
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(d + 1)));
      OrientedSubtorus t = randomPrimitiveSubtorus(d, k, Side::Base, rng, 4);
      OrientedSubtorus tp = randomPrimitiveSubtorus(d, d - k, Side::Base, rng, 4);
      Int pairing = pairingSigned(t, tp);
      if (pairing == 0) continue;
      --target;
      ++done;
      std::vector<TorusPoint> points = enumerateIntersection(t, tp);
      Int count = pairing < 0 ? Int(-pairing) : pairing;
      bool member = true;
      for (const TorusPoint& p : points)
        if (!containsPoint(t, p) || !containsPoint(tp, p)) member = false;
      if (Int(points.size()) != count || !member) {
        pass = false;
        detail << "  d=" << d << " B=" << t.basis.toText() << " B'=" << tp.basis.toText()
               << " pairing=" << pairing << " points=" << points.size() << "\n";
      }
    }
  }
  double t = seconds(start);
  std::ostringstream info;
  info.precision(2);
  info << std::fixed << done << " pairs, " << t << "s";
  report(6, "pairing equals point count", pass && done >= 500 && t < 30.0, info.str());
}

// criterion 7: exterior-algebra model: dual-basis pairing, antisymmetry
// and the coordinate-hyperplane product formula, exhaustive for d <= 5
void criterion7() {
  bool pass = true;
  for (int d = 1; d <= 5 && pass; ++d) {
    AlgebraSpec xs{d, Variance::X, Side::Base};
    AlgebraSpec ys{d, Variance::Y, Side::Base};
    for (const IndexSet& I : allSubsets(d)) {
      for (const IndexSet& J : allSubsets(d)) {
        Int expected = (I == J) ? 1 : 0;
        if (pairKH(ExteriorClass::monomial(xs, I), ExteriorClass::monomial(ys, J)) != expected) {
          pass = false;
          detail << "  pairing d=" << d << "\n";
        }
        // x_I ^ x_J = sign of the merging permutation * x_{I u J}
        ExteriorClass prod =
            wedge(ExteriorClass::monomial(xs, I), ExteriorClass::monomial(xs, J));
        int sign = mergeSign(I, J);
        ExteriorClass expectedProd(xs);
        if (sign != 0) {
          IndexSet merged;
          std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(merged));
          expectedProd.addTerm(merged, Int(sign));
        }
        if (prod != expectedProd) {
          pass = false;
          detail << "  product formula d=" << d << "\n";
        }
      }
    }
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        ExteriorClass lhs = wedge(ExteriorClass::monomial(xs, {i}), ExteriorClass::monomial(xs, {j}));
        ExteriorClass rhs = wedge(ExteriorClass::monomial(xs, {j}), ExteriorClass::monomial(xs, {i}));
        if (lhs != -rhs) {
          pass = false;
          detail << "  antisymmetry d=" << d << " i=" << i << " j=" << j << "\n";
        }
      }
  }
  report(7, "exterior-algebra model", pass);
}

// criterion 8: assembly factorization and the geometric description of
// the assembly map on random subtori
void criterion8() {
  bool pass = true;
  for (int d = 1; d <= 5 && pass; ++d) {
    GradedLinearMap mu = buildAssembly(d);
    GradedLinearMap composed = composeMaps(buildFMK(d), buildPDspin(d));
    if (mu.matrix() != composed.matrix()) {
      pass = false;
      detail << "  factorization mismatch d=" << d << "\n";
    }
    SeededRng rng(mixSeed(1008, static_cast<std::uint64_t>(d)));
    for (int trial = 0; trial < 200 && pass; ++trial) {
      OrientedSubtorus t = randomPrimitiveSubtorus(d, trial % (d + 1), Side::Base, rng, 4);
      ExteriorClass lhs = applyMap(mu, expandHomology(t));
      ExteriorClass rhs = expandKTheory(dualSubtorus(t)) * Int(fmSignKTheory(t.dim(), d));
      if (lhs != rhs || assemblyOnSubtorus(t) != lhs) {
        pass = false;
        detail << "  d=" << d << " basis=" << t.basis.toText() << "\n";
      }
    }
  }
  report(8, "assembly factorization and corollary", pass);
}

// criterion 9: HNF/SNF witness identities on 1000+ random matrices up
// to 5x5 with entries in [-9,9]
void criterion9() {
  bool pass = true;
  SeededRng rng(1009);
  long long trials = 1200;
  for (long long trial = 0; trial < trials && pass; ++trial) {
    std::size_t rows = static_cast<std::size_t>(rng.range(0, 5));
    std::size_t cols = static_cast<std::size_t>(rng.range(0, 5));
    IntMatrix A(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) A.at(r, c) = Int(rng.range(-9, 9));
    HermiteDecomposition hnf = hermiteNormalForm(A);
    SmithDecomposition snf = smithNormalForm(A);
    Int du = hnf.U.det(), su = snf.U.det(), sv = snf.V.det();
    if (A * hnf.U != hnf.H || (du != 1 && du != -1) || snf.U * A * snf.V != snf.D ||
        (su != 1 && su != -1) || (sv != 1 && sv != -1)) {
      pass = false;
      detail << "  A=" << A.toText() << "\n";
    }
  }
  std::ostringstream info;
  info << trials << " matrices";
  report(9, "normal-form witnesses", pass, info.str());
}

// criterion 10: the verify suite is byte-deterministic for a fixed seed
void criterion10() {
  VerifyOptions options;
  options.d = 3;
  options.seed = 7;
  options.trials = 60;
  VerifyReport first = runVerifySuite(options);
  VerifyReport second = runVerifySuite(options);
  bool pass = reportToJson(first).dump(2) == reportToJson(second).dump(2) &&
              formatReport(first) == formatReport(second) && first.allPass();
  if (!first.allPass()) detail << formatReport(first);
  report(10, "verify determinism", pass);
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria pass\n";
  return 0;
}
