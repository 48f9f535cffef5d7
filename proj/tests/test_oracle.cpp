#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toruskk/oracle.hpp"

using namespace toruskk;

namespace {

TorusPoint point(std::initializer_list<Rational> coords) {
  TorusPoint p;
  p.coords = coords;
  p.d = static_cast<int>(p.coords.size());
  return p;
}

} // namespace

TEST_CASE("enumerateIntersection") {
  SUBCASE("coordinate circles meet at the origin") {
    auto points = enumerateIntersection(coordinateSubtorus(2, Side::Base, {1}),
                                        coordinateSubtorus(2, Side::Base, {2}));
    REQUIRE(points.size() == 1);
    CHECK(points[0] == point({0, 0}));
  }
  SUBCASE("two points on the (1,2) circle") {
    auto points = enumerateIntersection(coordinateSubtorus(2, Side::Base, {1}),
                                        makeSubtorus(2, Side::Base, IntMatrix{{1}, {2}}));
    REQUIRE(points.size() == 2);
    CHECK(points[0] == point({0, 0}));
    CHECK(points[1] == point({Rational(1, 2), 0}));
  }
  SUBCASE("count matches the signed pairing") {
    SeededRng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      int d = 1 + static_cast<int>(rng.below(3));
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(d + 1)));
      OrientedSubtorus t = randomPrimitiveSubtorus(d, k, Side::Base, rng, 4);
      OrientedSubtorus tp = randomPrimitiveSubtorus(d, d - k, Side::Base, rng, 4);
      Int pairing = pairingSigned(t, tp);
      if (pairing == 0) continue;
      auto points = enumerateIntersection(t, tp);
      CHECK(Int(points.size()) == (pairing < 0 ? Int(-pairing) : pairing));
      for (const TorusPoint& p : points) {
        CHECK(containsPoint(t, p));
        CHECK(containsPoint(tp, p));
      }
    }
  }
  SUBCASE("non-transverse pairs error out") {
    OrientedSubtorus diag = makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}});
    CHECK_THROWS_AS(enumerateIntersection(diag, diag), Error);
  }
  SUBCASE("dimension check") {
    CHECK_THROWS_AS(enumerateIntersection(fullTorus(2, Side::Base), fullTorus(2, Side::Base)),
                    Error);
  }
}

TEST_CASE("grid oracle agrees on small denominators") {
  OrientedSubtorus a = coordinateSubtorus(2, Side::Base, {1});
  OrientedSubtorus b = makeSubtorus(2, Side::Base, IntMatrix{{1}, {2}});
  auto grid = gridEnumerateIntersection(a, b, 12);
  auto exact = enumerateIntersection(a, b);
  CHECK(grid == exact);
  SUBCASE("points beyond the denominator bound are invisible to the grid") {
    OrientedSubtorus big = makeSubtorus(2, Side::Base, IntMatrix{{1}, {13}});
    auto coarse = gridEnumerateIntersection(a, big, 12);
    auto all = enumerateIntersection(a, big);
    CHECK(all.size() == 13);
    REQUIRE(coarse.size() == 1); // only the origin has denominator <= 12
    CHECK(coarse[0] == point({0, 0}));
  }
}

TEST_CASE("containsPoint") {
  OrientedSubtorus diag = makeSubtorus(2, Side::Base, IntMatrix{{1}, {1}});
  CHECK(containsPoint(diag, point({Rational(1, 3), Rational(1, 3)})));
  CHECK_FALSE(containsPoint(diag, point({Rational(1, 3), Rational(2, 3)})));
  CHECK(containsPoint(fullTorus(2, Side::Base), point({Rational(1, 7), Rational(3, 5)})));
  CHECK_FALSE(containsPoint(trivialSubgroup(2, Side::Base), point({Rational(1, 7), 0})));
  CHECK(containsPoint(trivialSubgroup(2, Side::Base), point({0, 0})));
}

TEST_CASE("randomPrimitiveSubtorus") {
  SUBCASE("deterministic for a fixed seed") {
    RandomSpec spec{42, 4, 0};
    OrientedSubtorus a = randomPrimitiveSubtorus(4, 2, spec);
    OrientedSubtorus b = randomPrimitiveSubtorus(4, 2, spec);
    CHECK(a.basis == b.basis);
  }
  SUBCASE("always primitive, all dimensions") {
    SeededRng rng(7);
    for (int d = 1; d <= 5; ++d)
      for (int k = 0; k <= d; ++k) {
        OrientedSubtorus t = randomPrimitiveSubtorus(d, k, Side::Base, rng, 4);
        CHECK(isPrimitiveBasis(t.basis));
        CHECK(t.dim() == k);
      }
  }
  SUBCASE("trivial subgroup at k=0") {
    RandomSpec spec{1, 4, 0};
    CHECK(randomPrimitiveSubtorus(3, 0, spec).dim() == 0);
  }
  SUBCASE("rank-d bases are positively oriented") {
    SeededRng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      int d = 1 + static_cast<int>(rng.below(4));
      OrientedSubtorus t = randomPrimitiveSubtorus(d, d, Side::Base, rng, 4);
      CHECK(t.basis.det() == 1);
      CHECK(expandHomology(t).coefficient([&] {
        IndexSet top;
        for (int i = 1; i <= d; ++i) top.push_back(i);
        return top;
      }()) == 1);
    }
  }
  SUBCASE("different seeds explore different bases") {
    RandomSpec s1{1, 4, 0}, s2{2, 4, 0};
    bool different = false;
    for (int k = 1; k <= 3 && !different; ++k)
      different = randomPrimitiveSubtorus(4, k, s1).basis != randomPrimitiveSubtorus(4, k, s2).basis;
    CHECK(different);
  }
}

TEST_CASE("seeded rng determinism") {
  SeededRng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.range(-9, 9) == b.range(-9, 9));
}
