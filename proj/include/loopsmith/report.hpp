#pragma once

// JSON reports behind the command-line front end. All objects have sorted
// keys; listings are sorted.

#include <cstddef>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "loopsmith/suites.hpp"
#include "loopsmith/table.hpp"

namespace loopsmith {

nlohmann::json validation_json(const ValidationReport& report);

// Property flags, derived subloop orders, nilpotency class, and the
// half-automorphism census (skipped above max_half_order).
nlohmann::json analysis_json(const LoopTable& loop, int max_half_order = kDefaultMaxHalfOrder);

// Every half-automorphism in cycle notation with its classification, a census
// and, for complete enumerations, the group-closure result.
nlohmann::json half_automorphisms_json(const LoopTable& loop, std::size_t limit = 0);

struct TheoremRun {
  nlohmann::json report;
  bool ok = false;
};

// Main theorem driver plus all lemma suites over the given loops. With
// enforce_vacuity, a guarded suite whose hypothesis no input satisfies fails.
TheoremRun check_theorem(std::span<const LoopTable> loops,
                         int max_half_order = kDefaultMaxHalfOrder,
                         bool enforce_vacuity = false);

}  // namespace loopsmith
