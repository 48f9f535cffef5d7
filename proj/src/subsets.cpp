#include "toruskk/subsets.hpp"

namespace toruskk {

std::vector<IndexSet> subsetsOfSize(int d, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > d) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    // next combination
    int i = k - 1;
    while (i >= 0 && cur[i] == d - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> allSubsets(int d) {
  std::vector<IndexSet> out;
  for (int k = 0; k <= d; ++k)
    for (IndexSet& s : subsetsOfSize(d, k)) out.push_back(std::move(s));
  return out;
}

IndexSet complementSet(const IndexSet& s, int d) {
  IndexSet comp;
  std::size_t i = 0;
  for (int v = 1; v <= d; ++v) {
    if (i < s.size() && s[i] == v)
      ++i;
    else
      comp.push_back(v);
  }
  return comp;
}

int mergeSign(const IndexSet& a, const IndexSet& b) {
  // count inversions between the sorted blocks; sign of the shuffle
  std::size_t inversions = 0;
  std::size_t i = 0;
  for (int bv : b) {
    while (i < a.size() && a[i] < bv) ++i;
    if (i < a.size() && a[i] == bv) return 0;
    inversions += a.size() - i;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

bool isValidIndexSet(const IndexSet& s, int d) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > d) return false;
    if (i > 0 && s[i] <= s[i - 1]) return false;
  }
  return true;
}

} // namespace toruskk
