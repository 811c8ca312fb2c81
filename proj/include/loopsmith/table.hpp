#pragma once

// Finite loops given by Cayley tables over the elements 1..n, identity 1.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopsmith/error.hpp"

namespace loopsmith {

using Element = int;
using RawTable = std::vector<std::vector<int>>;

enum class ViolationKind {
  NotSquare,
  OutOfRange,
  RowRepeat,
  ColumnRepeat,
  NoIdentity,
};

const char* to_string(ViolationKind kind);

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

struct Violation {
  ViolationKind kind;
  std::vector<Cell> cells;  // 1-based witnesses
  std::string message;
};

struct ValidationReport {
  bool is_quasigroup = false;
  bool has_identity = false;
  std::optional<Element> identity_index;
  std::vector<Violation> violations;

  bool clean() const { return is_quasigroup && has_identity; }
  // NotSquare / OutOfRange: the input is not a table over 1..n at all.
  bool has_parse_level_violation() const;
};

ValidationReport validate(const RawTable& raw);

// Thrown when a table fails validation; carries the full report.
class ValidationError : public LoopError {
 public:
  explicit ValidationError(ValidationReport report);
  ValidationError(ValidationReport report, const std::string& message);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct ElementOrder {
  int order = 0;  // 0 when left powers never reach 1
  bool ambiguous = false;
};

struct MoufangReport {
  // ((xy)x)z = x(y(xz)), ((xy)z)y = x(y(zy)), (xy)(zx) = (x(yz))x
  std::array<bool, 3> identities{};
  bool all() const { return identities[0] && identities[1] && identities[2]; }
  bool flags_agree() const {
    return identities[0] == identities[1] && identities[1] == identities[2];
  }
};

// Immutable validated loop. Copies share the underlying tables.
class LoopTable {
 public:
  // Throws ValidationError unless the table is a loop. With normalize, an
  // identity other than 1 is swapped with label 1; without it, such a table
  // is rejected.
  static LoopTable from_raw(const RawTable& raw, std::string name = {},
                            bool normalize = false);

  int order() const noexcept { return data_->n; }
  const std::string& name() const noexcept { return data_->name; }
  LoopTable renamed(std::string name) const;

  Element mul(Element x, Element y) const;
  Element ldiv(Element x, Element y) const;  // x\y
  Element rdiv(Element y, Element x) const;  // y/x

  // Unchecked fast paths for inner loops; arguments must be in 1..n.
  Element mul_unchecked(Element x, Element y) const noexcept {
    return data_->mul[idx(x, y)];
  }
  Element ldiv_unchecked(Element x, Element y) const noexcept {
    return data_->ldiv[idx(x, y)];
  }
  Element rdiv_unchecked(Element y, Element x) const noexcept {
    return data_->rdiv[idx(y, x)];
  }

  RawTable raw() const;
  bool operator==(const LoopTable& other) const;

  void check_element(Element x) const;
  std::vector<Element> elements() const;

 private:
  struct Data {
    int n = 0;
    std::string name;
    std::vector<Element> mul;
    std::vector<Element> ldiv;
    std::vector<Element> rdiv;
  };

  explicit LoopTable(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::size_t idx(Element x, Element y) const noexcept {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(data_->n) +
           static_cast<std::size_t>(y - 1);
  }

  std::shared_ptr<const Data> data_;
};

// 1/x: the unique a with a·x = 1.
Element left_inverse(const LoopTable& loop, Element x);
// x\1: the unique b with x·b = 1.
Element right_inverse(const LoopTable& loop, Element x);

// Smallest k with x^(k) = 1 for left powers x^(k+1) = x·x^(k). The flag is
// set when right powers give a different minimum.
ElementOrder element_order(const LoopTable& loop, Element x);

bool is_commutative(const LoopTable& loop);
bool is_associative(const LoopTable& loop);
bool is_flexible(const LoopTable& loop);
// Every 2-generated subloop is a group.
bool is_diassociative(const LoopTable& loop);

bool has_two_sided_inverses(const LoopTable& loop);

// Least superset of seed ∪ {1} closed under ·, \ and /. Sorted.
std::vector<Element> closure(const LoopTable& loop, std::span<const Element> seed);

// ((x⁻¹·y⁻¹)·x)·y with x⁻¹ = x\1. Left-normed even when ⟨x,y⟩ is not a group.
Element commutator(const LoopTable& loop, Element x, Element y);
// (x·(y·z)) \ ((x·y)·z)
Element associator(const LoopTable& loop, Element x, Element y, Element z);

MoufangReport moufang_report(const LoopTable& loop);
inline bool is_moufang(const LoopTable& loop) { return moufang_report(loop).all(); }

}  // namespace loopsmith
