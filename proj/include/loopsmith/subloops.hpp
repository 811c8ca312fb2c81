#pragma once

// Subloop generation, derived subloops, normality, quotients, Sylow and Hall
// subloops, direct products and commutative nilpotency.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopsmith/table.hpp"

namespace loopsmith {

class Subloop {
 public:
  // Throws internal_error when elements is not a subloop of parent.
  Subloop(LoopTable parent, std::vector<Element> elements, std::vector<Element> generators = {});

  const LoopTable& parent() const noexcept { return parent_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::span<const Element> generators() const noexcept { return generators_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  bool is_group() const noexcept { return is_group_; }
  bool contains(Element x) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return order() == parent_.order(); }
  bool is_subset_of(const Subloop& other) const;

  // The subloop as a loop in its own right: element i+1 is elements()[i].
  LoopTable as_loop(std::string name = {}) const;
  // Position of x in elements() plus one (its label in as_loop()); 0 if absent.
  Element local_label(Element x) const;

  bool same_elements(const Subloop& other) const { return elements_ == other.elements_; }

 private:
  LoopTable parent_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::vector<char> member_;
  bool is_group_ = false;
};

// Independent re-check: contains 1 and is closed under ·, \ and /.
bool is_closed(const LoopTable& loop, std::span<const Element> set);

Subloop generate_subloop(const LoopTable& loop, std::span<const Element> seed);
Subloop whole_loop(const LoopTable& loop);

Subloop commutator_subloop(const LoopTable& loop);
Subloop associator_subloop(const LoopTable& loop);

Subloop nucleus_left(const LoopTable& loop);
Subloop nucleus_middle(const LoopTable& loop);
Subloop nucleus_right(const LoopTable& loop);
Subloop nucleus(const LoopTable& loop);

struct Commutant {
  std::vector<Element> elements;  // {x : xa = ax for all a}
  bool closed = false;
};
Commutant commutant(const LoopTable& loop);
Subloop center(const LoopTable& loop);

// Invariance of H under every ℓ_{x,y}, r_{x,y} and T_x.
bool is_normal(const LoopTable& loop, const Subloop& sub);

struct Quotient {
  LoopTable table;
  std::vector<Element> projection;  // projection[x-1] = coset label of x
  std::vector<std::vector<Element>> cosets;

  Element project(Element x) const { return projection[static_cast<std::size_t>(x - 1)]; }
};

// Cosets labelled by least representative order; the coset of 1 is 1.
// Throws Precondition when coset multiplication is ill-defined.
Quotient quotient(const LoopTable& loop, const Subloop& normal);

// Largest power of p dividing n.
int p_part(int n, int p);

struct SylowResult {
  std::optional<Subloop> subloop;  // set only when |S| is the full p-part
  int target_order = 1;
  int best_order = 1;
  bool exact = false;
  std::size_t candidates_examined = 0;
};

inline constexpr std::size_t kSylowSearchCap = 100'000;

SylowResult sylow_subloop(const LoopTable& loop, int p);

struct HallResult {
  std::optional<Subloop> subgroup;
  int target_order = 1;
  int closure_order = 1;
  bool in_nucleus = false;
  std::string diagnostics;
};

// Closure of the elements of order coprime to 3, accepted when its order is
// the 3'-part of |L| and it lies in the nucleus.
HallResult hall_3prime_subgroup(const LoopTable& loop);

bool is_direct_product(const LoopTable& loop, const Subloop& a, const Subloop& b);
// Pairwise version for several factors with coprime orders.
bool is_direct_product(const LoopTable& loop, std::span<const Subloop> factors);

// Least k with V_k = {1}, where V_1 = {[x,y]} and V_{k+1} = {[v,q] : v ∈ V_k}.
// Empty when the value sets cycle without reaching {1}.
std::optional<int> commutative_nilpotency_class(const LoopTable& loop);

std::vector<int> prime_divisors(int n);

}  // namespace loopsmith
