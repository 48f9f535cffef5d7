#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toruskk/subtorus.hpp"

using namespace toruskk;

namespace {

ExteriorClass xc(int d, const IndexSet& idx, int c = 1) {
  return ExteriorClass::monomial({d, Variance::X, Side::Base}, idx, Int(c));
}
ExteriorClass yc(int d, const IndexSet& idx, int c = 1) {
  return ExteriorClass::monomial({d, Variance::Y, Side::Base}, idx, Int(c));
}

} // namespace

TEST_CASE("makeSubtorus validation") {
  CHECK(makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}}).dim() == 1);
  CHECK(makeSubtorus(2, Side::Base, IntMatrix(2, 0)).dim() == 0);
  SUBCASE("index-2 sublattice is not an embedding") {
    try {
      makeSubtorus(2, Side::Base, IntMatrix{{2}, {0}});
      FAIL("expected embedding error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Embedding);
      CHECK(std::string(e.what()).find("2") != std::string::npos); // offending invariant
    }
  }
  SUBCASE("rank-deficient basis") {
    try {
      makeSubtorus(2, Side::Base, IntMatrix{{1, 2}, {1, 2}});
      FAIL("expected rank error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Rank);
    }
  }
  CHECK_THROWS_AS(makeSubtorus(2, Side::Base, IntMatrix{{1}}), Error); // wrong row count
}

TEST_CASE("dualSubtorus") {
  SUBCASE("diagonal circle in T^2") {
    OrientedSubtorus t = makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}});
    OrientedSubtorus dual = dualSubtorus(t);
    CHECK(dual.side == Side::Dual);
    CHECK(dual.basis == IntMatrix{{1}, {-1}});
    CHECK((t.basis.transpose() * dual.basis).isZero());
    CHECK(dualOrientationDefect(t) == 1);
  }
  SUBCASE("full circle dualizes to the trivial subgroup") {
    OrientedSubtorus t = fullTorus(1, Side::Base);
    CHECK(dualSubtorus(t).dim() == 0);
  }
  SUBCASE("trivial subgroup dualizes to the standard full torus") {
    OrientedSubtorus t = trivialSubgroup(2, Side::Base);
    OrientedSubtorus dual = dualSubtorus(t);
    CHECK(dual.basis == IntMatrix::identity(2));
    CHECK(dual.side == Side::Dual);
  }
  SUBCASE("negatively oriented full torus reports its defect") {
    IntMatrix swapped{{0, 1}, {1, 0}};
    OrientedSubtorus t = makeSubtorus(2, Side::Base, swapped);
    CHECK(dualSubtorus(t).dim() == 0);
    CHECK(dualOrientationDefect(t) == -1);
  }
  SUBCASE("side flips both ways") {
    OrientedSubtorus t = makeSubtorus(2, Side::Dual, IntMatrix{{1}, {1}});
    CHECK(dualSubtorus(t).side == Side::Base);
  }
}

TEST_CASE("expandHomology") {
  CHECK(expandHomology(makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}})) ==
        yc(2, {1}) + yc(2, {2}));
  CHECK(expandHomology(coordinateSubtorus(3, Side::Base, {2})) == yc(3, {2}));
  CHECK(expandHomology(fullTorus(3, Side::Base)) == yc(3, {1, 2, 3}));
  CHECK(expandHomology(trivialSubgroup(2, Side::Base)) == yc(2, {}));
}

TEST_CASE("expandKTheory") {
  CHECK(expandKTheory(coordinateSubtorus(2, Side::Base, {1})) == xc(2, {2}));
  CHECK(expandKTheory(makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}})) ==
        xc(2, {2}) - xc(2, {1}));
  CHECK(expandKTheory(trivialSubgroup(3, Side::Base)) == xc(3, {1, 2, 3}));
  CHECK(expandKTheory(fullTorus(2, Side::Base)) == xc(2, {}));
}

TEST_CASE("pairingSigned") {
  OrientedSubtorus e1 = coordinateSubtorus(2, Side::Base, {1});
  OrientedSubtorus e2 = coordinateSubtorus(2, Side::Base, {2});
  CHECK(pairingSigned(e1, e2) == 1);
  OrientedSubtorus skew = makeSubtorus(2, Side::Base, IntMatrix{{1}, {2}});
  CHECK(pairingSigned(e1, skew) == 2); // two intersection points
  SUBCASE("negating a column negates the pairing") {
    OrientedSubtorus flipped = makeSubtorus(2, Side::Base, IntMatrix{{-1}, {-2}});
    CHECK(pairingSigned(e1, flipped) == -2);
  }
  CHECK_THROWS_AS(pairingSigned(e1, fullTorus(2, Side::Base)), Error); // non-complementary
  CHECK_THROWS_AS(pairingSigned(e1, coordinateSubtorus(2, Side::Dual, {2})), Error);
}

TEST_CASE("intersectionData") {
  SUBCASE("coordinate circles in T^2") {
    IntersectionData data = intersectionData(coordinateSubtorus(2, Side::Base, {1}),
                                             coordinateSubtorus(2, Side::Base, {2}));
    CHECK(data.transverse);
    CHECK(data.componentCount == 1);
    CHECK(data.identityComponent.dim() == 0);
  }
  SUBCASE("two components") {
    IntersectionData data = intersectionData(coordinateSubtorus(2, Side::Base, {1}),
                                             makeSubtorus(2, Side::Base, IntMatrix{{1}, {2}}));
    CHECK(data.transverse);
    CHECK(data.componentCount == 2);
    CHECK(data.identityComponent.dim() == 0);
  }
  SUBCASE("coordinate planes in T^3 meet in a circle") {
    IntersectionData data = intersectionData(coordinateSubtorus(3, Side::Base, {1, 2}),
                                             coordinateSubtorus(3, Side::Base, {2, 3}));
    CHECK(data.transverse);
    CHECK(data.componentCount == 1);
    // positively oriented e_2, matching the hyperplane product formula
    CHECK(data.identityComponent.basis == IntMatrix{{0}, {1}, {0}});
  }
  SUBCASE("non-transverse pair is flagged") {
    IntersectionData data = intersectionData(coordinateSubtorus(3, Side::Base, {1}),
                                             coordinateSubtorus(3, Side::Base, {1, 2}));
    CHECK_FALSE(data.transverse);
    CHECK(data.componentCount == 0);
  }
  SUBCASE("wedge compatibility on a non-coordinate connected pair") {
    OrientedSubtorus t = makeSubtorus(3, Side::Base, IntMatrix{{1, 0}, {1, 1}, {0, 1}});
    OrientedSubtorus tp = makeSubtorus(3, Side::Base, IntMatrix{{0, 1}, {1, 0}, {1, 0}});
    IntersectionData data = intersectionData(t, tp);
    REQUIRE(data.transverse);
    if (data.componentCount == 1 && data.identityComponent.dim() > 0)
      CHECK(wedge(expandKTheory(t), expandKTheory(tp)) ==
            expandKTheory(data.identityComponent));
  }
}
