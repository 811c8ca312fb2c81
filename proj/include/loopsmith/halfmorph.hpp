#pragma once

// Half-isomorphisms: bijections τ with τ(xy) ∈ {τ(x)τ(y), τ(y)τ(x)}.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loopsmith/inner_maps.hpp"
#include "loopsmith/subloops.hpp"
#include "loopsmith/table.hpp"

namespace loopsmith {

// The three values compared for a pair (x,y).
struct PairEvaluation {
  Element image_of_product = 0;  // τ(xy)
  Element hom_value = 0;         // τ(x)τ(y)
  Element anti_value = 0;        // τ(y)τ(x)

  bool hom() const { return image_of_product == hom_value; }
  bool anti() const { return image_of_product == anti_value; }
  bool hom_only() const { return hom() && !anti(); }
  bool anti_only() const { return anti() && !hom(); }
};

class HalfMapError : public LoopError {
 public:
  HalfMapError(Element x, Element y, PairEvaluation values);
  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }
  const PairEvaluation& values() const noexcept { return values_; }

 private:
  Element x_;
  Element y_;
  PairEvaluation values_;
};

class HalfMap {
 public:
  const LoopTable& domain() const noexcept { return domain_; }
  const LoopTable& codomain() const noexcept { return codomain_; }
  const Perm& perm() const noexcept { return perm_; }
  Element operator()(Element x) const { return perm_(x); }

  PairEvaluation evaluate(Element x, Element y) const;

  friend HalfMap make_half_map(const LoopTable&, const LoopTable&, std::vector<Element>);

 private:
  HalfMap(LoopTable domain, LoopTable codomain, Perm perm)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), perm_(std::move(perm)) {}

  LoopTable domain_;
  LoopTable codomain_;
  Perm perm_;
};

// Throws HalfMapError on the first pair violating the defining property,
// argument_error when images is not a bijection of the right degree.
HalfMap make_half_map(const LoopTable& domain, const LoopTable& codomain,
                      std::vector<Element> images);
HalfMap make_half_map(const LoopTable& loop, const Perm& perm);

enum class HalfKind { Isomorphism, AntiIsomorphism, Both, ProperHalf };
const char* to_string(HalfKind kind);

struct HalfClass {
  HalfKind kind = HalfKind::Both;
  std::size_t hom_pairs = 0;
  std::size_t anti_pairs = 0;
  // Least pair where the hom law holds and the anti law fails, and dually.
  std::optional<std::pair<Element, Element>> witness_hom;
  std::optional<std::pair<Element, Element>> witness_anti;

  bool trivial() const { return kind != HalfKind::ProperHalf; }
};

HalfClass classify(const HalfMap& tau);

struct HalfEnumeration {
  std::vector<HalfMap> maps;  // sorted by image array
  bool complete = true;
};

inline constexpr int kMaxHalfSearchOrder = 63;

// Depth-first search over identity-fixing bijections. limit = 0 means none.
// Worker count comes from LOOPSMITH_THREADS (0 or unset = hardware).
// Orders above kMaxHalfSearchOrder are an argument error.
HalfEnumeration enumerate_half_automorphisms(const LoopTable& loop, std::size_t limit = 0);

// Closed under composition and inverse and contains the identity.
bool half_maps_form_group(std::span<const HalfMap> maps);
// Precondition: the enumeration is complete.
bool half_maps_form_group_check(const HalfEnumeration& enumeration);

struct SemiIsomorphismReport {
  bool holds = false;            // τ((uv)u) = (τu·τv)·τu (and u(vu) form if not flexible)
  bool printed_variant = false;  // τ((uv)u) = (τu·τv)·τv
  bool flexible_domain = false;
  std::optional<std::pair<Element, Element>> first_failure;
};

SemiIsomorphismReport semi_isomorphism_report(const HalfMap& tau);
inline bool is_semi_isomorphism(const HalfMap& tau) { return semi_isomorphism_report(tau).holds; }

struct GGTriple {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  auto operator<=>(const GGTriple&) const = default;
};

// Triples with [x,y] ≠ 1, [x,z] ≠ 1, τ(xy) = τxτy ≠ τyτx and
// τ(xz) = τzτx ≠ τxτz. Requires a Moufang domain.
std::vector<GGTriple> find_gg_triples(const HalfMap& tau);

// {g : ∃h, τ(gh) = τ(h)τ(g) ≠ τ(g)τ(h)}
std::vector<Element> d_set(const HalfMap& tau);

struct InducedMap {
  Quotient domain_quotient;
  Quotient codomain_quotient;
  HalfMap map;
};

// The map induced on L/(L,L,L). Throws Precondition when the associator
// subloops are not normal, τ does not carry one onto the other, or the
// image of a coset depends on the representative.
InducedMap induced_on_quotient(const HalfMap& tau);

HalfMap inverse_half_map(const HalfMap& tau);

struct InversionComposite {
  Perm map;  // x ↦ τ(x)⁻¹
  bool is_homomorphism = false;
};

// Requires two-sided inverses in the codomain.
InversionComposite compose_with_inversion(const HalfMap& tau);

struct HalfCensus {
  std::size_t total = 0;
  std::size_t isomorphisms = 0;
  std::size_t anti_isomorphisms = 0;
  std::size_t both = 0;
  std::size_t proper = 0;
};

HalfCensus census(std::span<const HalfMap> maps);

struct TheoremReport {
  std::string name;
  int order = 0;
  bool moufang = false;
  bool automorphic = false;
  bool hypotheses_hold() const { return moufang && automorphic; }
  bool complete = true;
  HalfCensus counts;
  std::vector<Perm> proper_witnesses;
};

// Throws TheoremViolation when an automorphic Moufang loop has a proper
// half-automorphism.
TheoremReport verify_main_theorem(const LoopTable& loop);

}  // namespace loopsmith
