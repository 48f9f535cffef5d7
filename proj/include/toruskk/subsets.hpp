#pragma once

#include <cstddef>
#include <vector>

namespace toruskk {

// Index sets are sorted ascending 1-based subsets of {1..d}.
using IndexSet = std::vector<int>;

// canonical monomial order: by size, then lexicographically
struct SubsetOrder {
  bool operator()(const IndexSet& a, const IndexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// all size-k subsets of {1..d} in lexicographic order
std::vector<IndexSet> subsetsOfSize(int d, int k);

// all 2^d subsets in canonical monomial order
std::vector<IndexSet> allSubsets(int d);

IndexSet complementSet(const IndexSet& s, int d);

// sign of the permutation sorting the concatenation (a, b); 0 if they
// intersect. a and b are each sorted ascending.
int mergeSign(const IndexSet& a, const IndexSet& b);

bool isValidIndexSet(const IndexSet& s, int d);

} // namespace toruskk
