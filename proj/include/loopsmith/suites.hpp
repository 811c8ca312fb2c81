#pragma once

// Executable property suites: each checks one structural fact or lemma
// instance over a loop, counting how many inputs satisfy its hypothesis.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopsmith/halfmorph.hpp"
#include "loopsmith/subloops.hpp"
#include "loopsmith/table.hpp"

namespace loopsmith {

struct SuiteResult {
  std::string name;
  // Guarded suites fail when no input satisfies the hypothesis.
  bool guarded = true;
  std::size_t hypothesis_count = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  // Checks where the statement as printed fails but the corrected form holds.
  std::size_t literal_mismatches = 0;
  std::vector<std::string> messages;  // first few violations

  void fail(std::string message);
  bool vacuous() const { return hypothesis_count == 0; }
  bool passed(bool enforce_vacuity = true) const {
    return violations == 0 && !(enforce_vacuity && guarded && vacuous());
  }
};

// Facts shared between suites, computed once per loop.
struct LoopFacts {
  LoopTable loop;
  bool moufang = false;
  bool left_automorphic = false;
  bool automorphic = false;
  Subloop nucleus;
  // Absent when the order exceeds the census threshold.
  std::optional<HalfEnumeration> halves;
  std::vector<HalfClass> classes;  // parallel to halves->maps

  bool left_automorphic_moufang() const { return moufang && left_automorphic; }
  bool automorphic_moufang() const { return moufang && automorphic; }
};

inline constexpr int kDefaultMaxHalfOrder = 20;

LoopFacts gather_facts(const LoopTable& loop, int max_half_order = kDefaultMaxHalfOrder);

SuiteResult suite_moufang_flags_agree(const LoopFacts& f);
SuiteResult suite_nuclei_coincide(const LoopFacts& f);
SuiteResult suite_moufang_diassociative(const LoopFacts& f);
SuiteResult suite_commutator_detects_commuting(const LoopFacts& f);
SuiteResult suite_moufang_l_iff_r(const LoopFacts& f);
SuiteResult suite_bruck_commutators_in_nucleus(const LoopFacts& f);
SuiteResult suite_bruck_commutator_expansion(const LoopFacts& f);
SuiteResult suite_bruck_nucleus_absorption(const LoopFacts& f);
SuiteResult suite_bruck_cubes_in_nucleus(const LoopFacts& f);
SuiteResult suite_bruck_associators_central(const LoopFacts& f);
SuiteResult suite_sylow_nucleus_factorization(const LoopFacts& f);
SuiteResult suite_lagrange(const LoopFacts& f);
SuiteResult suite_quotient_soundness(const LoopFacts& f);
SuiteResult suite_nilpotent_direct_product(const LoopFacts& f);
SuiteResult suite_half_maps_group(const LoopFacts& f);
SuiteResult suite_semi_isomorphism(const LoopFacts& f);
SuiteResult suite_gg_existence(const LoopFacts& f);
SuiteResult suite_odd_order_triviality(const LoopFacts& f);
SuiteResult suite_induced_triviality(const LoopFacts& f);
SuiteResult suite_anti_via_inversion(const LoopFacts& f);
SuiteResult suite_main_theorem(const LoopFacts& f);
SuiteResult suite_commutant_of_d_set(const LoopFacts& f);
SuiteResult suite_gg_subloop_nilpotent(const LoopFacts& f);

std::vector<SuiteResult> run_all_suites(const LoopFacts& f);

// Sums suites with the same name across loops, keeping first-seen order.
std::vector<SuiteResult> merge_suites(std::span<const std::vector<SuiteResult>> per_loop);

}  // namespace loopsmith
