#pragma once

#include "toruskk/fm.hpp"
#include "toruskk/oracle.hpp"
#include "toruskk/report.hpp"

namespace toruskk {

struct VerifyOptions {
  int d = 3;
  std::uint64_t seed = 0;
  long long trials = 200;
  int entryBound = 4;
  // run only the named properties; empty means all
  std::vector<std::string> filter;
};

// canonical property list in execution order
std::vector<std::string> verifyPropertyNames();

// Seeded property suite over every module: normal-form witnesses,
// exterior-algebra identities, duality and pairing laws, the transform
// theorems and the assembly corollary. Deterministic given options.
VerifyReport runVerifySuite(const VerifyOptions& options);

} // namespace toruskk
