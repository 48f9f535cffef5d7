#pragma once

#include <cstdint>
#include <random>

#include "toruskk/subtorus.hpp"

namespace toruskk {

// point of the d-torus with rational coordinates reduced into [0,1)
struct TorusPoint {
  int d = 0;
  std::vector<Rational> coords;

  bool operator==(const TorusPoint&) const = default;
  bool operator<(const TorusPoint& other) const { return coords < other.coords; }
  std::string describe() const; // "(1/2, 0)"
};

// reproducible stream for a fixed seed; bug reports cite seeds
struct RandomSpec {
  std::uint64_t seed = 0;
  int entryBound = 4;
  long long trials = 0;
};

// Deterministic RNG wrapper. Draws below() by rejection from the fully
// specified mt19937_64 stream, so outputs are identical on every
// platform and run.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n); // uniform in [0, n)
  long long range(long long lo, long long hi); // inclusive bounds

private:
  std::mt19937_64 engine_;
};

// stable per-trial derived seeds
std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t salt);

// exact torus membership: does the point lie on the subtorus?
bool containsPoint(const OrientedSubtorus& t, const TorusPoint& p);

// All points of the (finite) intersection of two transverse subtori of
// complementary dimension, solved through the Smith normal form of the
// stacked relation matrix [B | -B']. The list is sorted and its length
// equals |det [B | B']|.
std::vector<TorusPoint> enumerateIntersection(const OrientedSubtorus& t,
                                              const OrientedSubtorus& tp);

// secondary brute-force oracle: every common point whose coordinates
// have denominator at most maxDenominator (intended for d <= 2)
std::vector<TorusPoint> gridEnumerateIntersection(const OrientedSubtorus& t,
                                                  const OrientedSubtorus& tp,
                                                  int maxDenominator);

// random product of bounded elementary column operations; det +1
IntMatrix randomUnimodular(int d, int entryBound, SeededRng& rng);

// First k columns of a random unimodular matrix: primitive by
// construction. Entries are regenerated until they fit entryBound.
// Rank-d output is always positively oriented, since a point has no
// basis column to carry a reversed dual orientation.
OrientedSubtorus randomPrimitiveSubtorus(int d, int k, Side side, SeededRng& rng,
                                         int entryBound);
OrientedSubtorus randomPrimitiveSubtorus(int d, int k, const RandomSpec& spec);

} // namespace toruskk
