#pragma once

// Built-in loops, group-table constructors and the .loop text format.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loopsmith/table.hpp"

namespace loopsmith {

enum class Provenance { Paper, Trivial, Derived };
const char* to_string(Provenance p);

struct Expectation {
  std::string property;
  std::variant<bool, long long> value;
  Provenance provenance;
};

struct CatalogEntry {
  std::string key;
  LoopTable table;
  std::vector<Expectation> expected;
};

// Keys in a fixed order: groups first, then Moufang constructions, Q1, Q2.
const std::vector<std::string>& catalog_keys();
// Throws NotFound for unknown keys. Expectations are re-verified on first
// load; a mismatch is an internal error.
const CatalogEntry& builtin(std::string_view key);

// Computes a property named in an Expectation (order, associative,
// commutative, diassociative, moufang, left_automorphic, automorphic).
std::variant<bool, long long> evaluate_property(const LoopTable& loop, std::string_view property);

// Mismatched expectations, one line each; empty when all hold.
std::vector<std::string> verify_expectations(const CatalogEntry& entry);

LoopTable make_cyclic(int n);
// Dihedral group of order n (n even), r^a s^e labelled a + (n/2)·e + 1.
LoopTable make_dihedral(int n);
LoopTable make_symmetric3();
LoopTable make_quaternion8();
// Chein doubling M(G,2) of a group G; labels |G|+g stand for g·u.
LoopTable make_chein(const LoopTable& group);

// Text-level failure in a .loop file, with 1-based position.
class LoopFileError : public LoopError {
 public:
  LoopFileError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct LoopFile {
  std::string name;
  bool normalize = false;
  RawTable raw;
  // Source position of each cell, for diagnostics.
  std::vector<int> row_lines;
  std::vector<std::vector<int>> cell_columns;
};

// Tokenizes without validating the table; throws LoopFileError.
LoopFile read_loop_text(std::string_view text);
// Full parse. Throws LoopFileError for text problems and ValidationError
// (message naming line and column) when the table is not a loop.
CatalogEntry parse_loop_file(std::string_view text, bool force_normalize = false);
std::string write_loop_file(const CatalogEntry& entry);
std::string write_loop_file(const LoopTable& table);

// JSON object with keys expected, name, order, table (sorted).
std::string export_json(const CatalogEntry& entry);

}  // namespace loopsmith
