#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chiwb/ring.hpp"

namespace chiwb {

// Seeded random-instance scans for the conjecture-shaped invariants.
// Kinds: decency, vanishing, positivity, lowerbound, tennison.
struct ScanOutcome {
  std::string kind;
  unsigned checked = 0;     // instances generated and examined
  unsigned cases = 0;       // instances where the scanned implication applies
  unsigned violations = 0;  // instances where it fails
  std::vector<std::string> violating;  // printable witnesses, empty when clean
};

ScanOutcome run_scan(const RingPtr& ring, const std::string& kind, unsigned count,
                     std::uint64_t seed);

}  // namespace chiwb
