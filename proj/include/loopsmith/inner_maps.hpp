#pragma once

// Permutations of 1..n, translations, inner mappings and automorphism tests.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopsmith/table.hpp"

namespace loopsmith {

class Perm {
 public:
  Perm() = default;
  // Throws argument_error unless images is a bijection on 1..n, where
  // images[x-1] is the image of x.
  explicit Perm(std::vector<Element> images);

  static Perm identity(int degree);
  // Parses "(3,5)(4,6)(7,8)" or "(5 8)"; "()" is the identity.
  static Perm from_cycles(std::string_view cycles, int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::span<const Element> images() const noexcept { return images_; }

  // (this ∘ inner)(z) = this(inner(z))
  Perm after(const Perm& inner) const;
  Perm inverse() const;
  bool is_identity() const;

  // Disjoint cycles, each starting at its least element, ordered by that
  // element; fixed points omitted; "()" for the identity.
  std::string cycle_string(std::string_view separator = ",") const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Element> images_;
};

Perm left_translation(const LoopTable& loop, Element a);   // z ↦ a·z
Perm right_translation(const LoopTable& loop, Element a);  // z ↦ z·a

Perm inner_l(const LoopTable& loop, Element x, Element y);  // z ↦ (xy)\(x(yz))
Perm inner_r(const LoopTable& loop, Element x, Element y);  // z ↦ ((zx)y)/(xy)
Perm inner_t(const LoopTable& loop, Element x);             // z ↦ x\(zx)

bool is_automorphism(const LoopTable& loop, const Perm& sigma);

enum class InnerFamily { L, R, T };
const char* to_string(InnerFamily family);

// An inner-mapping generator that fails to be an automorphism, with a pair
// (a,b) on which it breaks multiplicativity.
struct InnerWitness {
  InnerFamily family;
  Element x = 0;
  Element y = 0;  // unused for T
  Element a = 0;
  Element b = 0;
};

// Lexicographically first failing generator (ℓ before r before T).
std::optional<InnerWitness> automorphic_witness(const LoopTable& loop);
std::optional<InnerWitness> left_automorphic_witness(const LoopTable& loop);
inline bool is_automorphic(const LoopTable& loop) { return !automorphic_witness(loop); }
inline bool is_left_automorphic(const LoopTable& loop) {
  return !left_automorphic_witness(loop);
}

// For every (x,y): ℓ_{x,y} is an automorphism iff r_{x,y} is. Requires a
// Moufang loop; throws Precondition otherwise.
bool moufang_l_iff_r_check(const LoopTable& loop);

// Generators ℓ_{x,y}, r_{x,y}, T_x for all x,y, duplicates removed.
std::vector<Perm> inner_generators(const LoopTable& loop);
std::vector<Perm> left_inner_generators(const LoopTable& loop);

struct PermGroupHandle {
  std::vector<Perm> generators;
  std::optional<std::vector<Perm>> elements;  // sorted; set when not capped
  std::optional<std::size_t> order;
  bool capped = false;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Breadth-first closure of the generators under composition.
PermGroupHandle group_closure(std::span<const Perm> generators,
                              std::size_t cap = kDefaultClosureCap);

}  // namespace loopsmith
