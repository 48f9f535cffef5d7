#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toruskk {

struct PropertyResult {
  std::string name;
  bool pass = true;
  long long checks = 0;          // individual assertions exercised
  std::string counterexample;    // empty when passing
};

// Structured result of a seeded property run. Rendering is stable and
// diff-friendly; determinism given (seed, d, trials) is part of the
// contract.
struct VerifyReport {
  std::uint64_t seed = 0;
  int d = 0;
  long long trials = 0;
  std::vector<PropertyResult> properties;

  bool allPass() const {
    for (const PropertyResult& p : properties)
      if (!p.pass) return false;
    return true;
  }
};

std::string formatReport(const VerifyReport& report);

} // namespace toruskk
