#include <doctest.h>

#include <algorithm>

#include "loopsmith/catalog.hpp"
#include "loopsmith/table.hpp"
#include "oracles.hpp"

using namespace loopsmith;

namespace {

const LoopTable& q1() { return builtin("Q1").table; }
const LoopTable& q2() { return builtin("Q2").table; }

bool has_kind(const ValidationReport& r, ViolationKind k) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [k](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_SUITE("table") {

TEST_CASE("mul, ldiv and rdiv on Q1 and Q2") {
  CHECK(q1().mul(2, 7) == 5);
  CHECK(q1().mul(1, 9) == 9);
  CHECK(q2().mul(4, 6) == 7);
  CHECK(q1().ldiv(2, 5) == 7);
  CHECK(q2().ldiv(4, 8) == 5);
  CHECK(q1().rdiv(5, 7) == 2);
  CHECK(q2().rdiv(7, 6) == 4);
  for (const LoopTable* L : {&q1(), &q2()})
    for (int y = 1; y <= L->order(); ++y) {
      CHECK(L->ldiv(1, y) == y);
      CHECK(L->rdiv(y, 1) == y);
    }
}

TEST_CASE("checked accessors reject elements outside 1..n") {
  CHECK_THROWS_AS(q2().mul(0, 1), LoopError);
  CHECK_THROWS_AS(q2().mul(1, 9), LoopError);
  CHECK_THROWS_AS(q2().ldiv(9, 1), LoopError);
}

TEST_CASE("division laws and Latin property hold on every catalog table") {
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const int n = L.order();
    CHECK(oracle::is_latin(L.raw()));
    for (int x = 1; x <= n; ++x) {
      CHECK(L.mul(1, x) == x);
      CHECK(L.mul(x, 1) == x);
      for (int y = 1; y <= n; ++y) {
        CHECK(L.rdiv(L.mul(x, y), y) == x);
        CHECK(L.mul(L.rdiv(x, y), y) == x);
        CHECK(L.mul(x, L.ldiv(x, y)) == y);
        CHECK(L.ldiv(x, L.mul(x, y)) == y);
      }
    }
  }
}

TEST_CASE("validate reports") {
  const auto q1_report = validate(q1().raw());
  CHECK(q1_report.clean());
  CHECK(q1_report.identity_index == 1);
  CHECK(q1_report.violations.empty());

  const auto z2 = validate({{1, 2}, {2, 1}});
  CHECK(z2.clean());
  CHECK(z2.identity_index == 1);

  const auto bad = validate({{1, 2}, {2, 2}});
  CHECK_FALSE(bad.is_quasigroup);
  CHECK_FALSE(bad.clean());
  REQUIRE(has_kind(bad, ViolationKind::ColumnRepeat));
  for (const auto& v : bad.violations)
    if (v.kind == ViolationKind::ColumnRepeat)
      for (const Cell& c : v.cells) CHECK(c.col == 2);

  CHECK(has_kind(validate({{1, 2}, {2}}), ViolationKind::NotSquare));
  CHECK(has_kind(validate({{1, 3}, {2, 1}}), ViolationKind::OutOfRange));
  CHECK(validate({{1, 3}, {2, 1}}).has_parse_level_violation());
  // A Latin square without identity.
  const auto noid = validate({{2, 1, 3}, {1, 3, 2}, {3, 2, 1}});
  CHECK(noid.is_quasigroup);
  CHECK_FALSE(noid.has_identity);
  CHECK(has_kind(noid, ViolationKind::NoIdentity));
}

TEST_CASE("violations are empty exactly when both flags hold") {
  const RawTable samples[] = {
      {{1, 2}, {2, 1}}, {{1, 2}, {2, 2}}, {{2, 1}, {1, 2}}, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}},
      {{2, 3, 1}, {3, 1, 2}, {1, 2, 3}}, {{1, 2, 3}, {2, 1, 3}, {3, 3, 1}}};
  for (const auto& raw : samples) {
    const auto r = validate(raw);
    CHECK(r.violations.empty() == (r.is_quasigroup && r.has_identity));
    CHECK(r.is_quasigroup == oracle::is_latin(raw));
  }
}

TEST_CASE("from_raw rejects non-loops and relabels on request") {
  CHECK_THROWS_AS(LoopTable::from_raw({{1, 2}, {2, 2}}), ValidationError);
  // Identity at 2.
  const RawTable shifted{{2, 1, 3}, {1, 2, 3}, {3, 3, 3}};
  CHECK_THROWS(LoopTable::from_raw(shifted));
  const RawTable z3_id2{{3, 1, 2}, {1, 2, 3}, {2, 3, 1}};
  CHECK_THROWS_AS(LoopTable::from_raw(z3_id2), LoopError);
  const LoopTable n = LoopTable::from_raw(z3_id2, "z3", true);
  CHECK(n.order() == 3);
  CHECK(oracle::identity_is_one(oracle::Table(n.raw())));
  CHECK(oracle::is_latin(n.raw()));
}

TEST_CASE("inverses") {
  CHECK(left_inverse(q2(), 2) == 2);
  CHECK(right_inverse(q1(), 2) == 6);
  for (const LoopTable* L : {&q1(), &q2()}) {
    CHECK(left_inverse(*L, 1) == 1);
    for (int x = 1; x <= L->order(); ++x) {
      CHECK(L->mul(left_inverse(*L, x), x) == 1);
      CHECK(L->mul(x, right_inverse(*L, x)) == 1);
    }
  }
}

TEST_CASE("element orders") {
  const auto o = element_order(q2(), 2);
  CHECK(o.order == 2);
  CHECK_FALSE(o.ambiguous);
  CHECK(element_order(q1(), 1).order == 1);
  // Left powers of 9 in Q1, iterated by hand from the oracle table.
  const oracle::Table t(q1().raw());
  int k = 1;
  for (int p = 9; p != 1; p = t.mul(9, p)) ++k;
  const auto o9 = element_order(q1(), 9);
  CHECK(o9.order == k);
  CHECK(oracle::generated(t, {9}).size() % static_cast<std::size_t>(k) == 0);
}

TEST_CASE("commutativity, associativity, diassociativity against the oracle") {
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const oracle::Table t(L.raw());
    INFO(key);
    CHECK(is_commutative(L) == oracle::commutative(t));
    CHECK(is_associative(L) == oracle::associative(t));
    CHECK(is_diassociative(L) == oracle::diassociative(t));
  }
  // Q2 is not associative: a group would be Moufang.
  CHECK_FALSE(is_associative(q2()));
  CHECK(is_commutative(make_cyclic(3)));
  CHECK(is_diassociative(q1()));
}

TEST_CASE("commutators") {
  for (int x = 1; x <= q1().order(); ++x) CHECK(commutator(q1(), x, x) == 1);
  const oracle::Table t(q1().raw());
  const int c = commutator(q1(), 2, 7);
  CHECK(c != 1);
  CHECK(c == oracle::commutator(t, 2, 7));
  const LoopTable z5 = make_cyclic(5);
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y) CHECK(commutator(z5, x, y) == 1);
}

TEST_CASE("associators") {
  const oracle::Table t1(q1().raw());
  const oracle::Table t2(q2().raw());
  bool q1_witness = false;
  bool q2_witness = false;
  for (int x = 1; x <= 16; ++x)
    for (int y = 1; y <= 16; ++y)
      for (int z = 1; z <= 16; ++z) {
        const int a = associator(q1(), x, y, z);
        CHECK(a == oracle::associator(t1, x, y, z));
        if (x == 1) CHECK(a == 1);
        if (a != 1) q1_witness = true;
        if (x <= 8 && y <= 8 && z <= 8 && associator(q2(), x, y, z) != 1) q2_witness = true;
      }
  CHECK(q1_witness);
  CHECK(q2_witness == !oracle::associative(t2));
}

TEST_CASE("Moufang identities") {
  const auto r1 = moufang_report(q1());
  CHECK(r1.identities[0]);
  CHECK(r1.identities[1]);
  CHECK(r1.identities[2]);
  CHECK_FALSE(is_moufang(q2()));
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const auto expected = oracle::moufang(oracle::Table(L.raw()));
    const auto r = moufang_report(L);
    INFO(key);
    for (int i = 0; i < 3; ++i) CHECK(r.identities[i] == expected[i]);
    if (is_associative(L)) CHECK(r.all());
  }
}

TEST_CASE("closure is the least subloop containing the seed") {
  const oracle::Table t(q1().raw());
  const Element seed[] = {2, 9};
  const auto c = closure(q1(), seed);
  const auto expected = oracle::generated(t, {2, 9});
  CHECK(std::vector<int>(expected.begin(), expected.end()) == c);
  CHECK(closure(q1(), std::span<const Element>{}) == std::vector<Element>{1});
}

}  // TEST_SUITE
