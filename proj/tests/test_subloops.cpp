#include <doctest.h>

#include <set>

#include "loopsmith/catalog.hpp"
#include "loopsmith/subloops.hpp"
#include "oracles.hpp"

using namespace loopsmith;

namespace {

const LoopTable& q1() { return builtin("Q1").table; }
const LoopTable& q2() { return builtin("Q2").table; }

std::set<int> as_set(const Subloop& s) { return {s.elements().begin(), s.elements().end()}; }

Subloop gen(const LoopTable& L, std::initializer_list<Element> seed) {
  const std::vector<Element> v(seed);
  return generate_subloop(L, v);
}

std::set<int> oracle_commutator_subloop(const oracle::Table& t) {
  std::set<int> s;
  for (int x = 1; x <= t.n; ++x)
    for (int y = 1; y <= t.n; ++y) s.insert(oracle::commutator(t, x, y));
  return oracle::generated(t, s);
}

std::set<int> oracle_associator_subloop(const oracle::Table& t) {
  std::set<int> s;
  for (int x = 1; x <= t.n; ++x)
    for (int y = 1; y <= t.n; ++y)
      for (int z = 1; z <= t.n; ++z) s.insert(oracle::associator(t, x, y, z));
  return oracle::generated(t, s);
}

}  // namespace

TEST_SUITE("subloops") {

TEST_CASE("generated subloops") {
  CHECK(as_set(gen(q1(), {})) == std::set<int>{1});
  CHECK(as_set(gen(q2(), {2})) == std::set<int>{1, 2});
  CHECK(gen(q1(), {2, 3, 9}).is_whole());
  const oracle::Table t(q1().raw());
  for (int x = 1; x <= 16; ++x)
    for (int y = x; y <= 16; ++y) {
      const Subloop s = gen(q1(), {x, y});
      CHECK(as_set(s) == oracle::generated(t, {x, y}));
      CHECK(is_closed(q1(), s.elements()));
      CHECK(s.is_group());
      CHECK(16 % s.order() == 0);
    }
}

TEST_CASE("as_loop relabels a subloop") {
  const Subloop s = gen(q1(), {2});
  const LoopTable sub = s.as_loop("c");
  CHECK(sub.order() == s.order());
  for (Element a : s.elements())
    for (Element b : s.elements())
      CHECK(sub.mul(s.local_label(a), s.local_label(b)) == s.local_label(q1().mul(a, b)));
}

TEST_CASE("commutator and associator subloops against the oracle") {
  CHECK(commutator_subloop(make_cyclic(6)).is_trivial());
  CHECK(commutator_subloop(make_symmetric3()).order() == 3);
  const Subloop c1 = commutator_subloop(q1());
  CHECK_FALSE(c1.is_trivial());
  CHECK_FALSE(c1.is_whole());
  CHECK(associator_subloop(make_dihedral(8)).is_trivial());
  CHECK_FALSE(associator_subloop(q1()).is_trivial());
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    if (L.order() > 16) continue;
    const oracle::Table t(L.raw());
    INFO(key);
    CHECK(as_set(commutator_subloop(L)) == oracle_commutator_subloop(t));
    CHECK(as_set(associator_subloop(L)) == oracle_associator_subloop(t));
  }
  // Q2 is not associative, so its associator subloop is nontrivial.
  CHECK_FALSE(associator_subloop(q2()).is_trivial());
}

TEST_CASE("nuclei") {
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const oracle::Table t(L.raw());
    INFO(key);
    CHECK(as_set(nucleus(L)) == oracle::nucleus(t));
    if (is_associative(L)) CHECK(nucleus(L).is_whole());
  }
  const Subloop nl = nucleus_left(q1());
  CHECK(nl.same_elements(nucleus_middle(q1())));
  CHECK(nl.same_elements(nucleus_right(q1())));
  CHECK(nl.same_elements(nucleus(q1())));
}

TEST_CASE("commutant and center") {
  CHECK(center(make_cyclic(7)).is_whole());
  const Commutant z2 = commutant(q2());
  CHECK(std::set<int>(z2.elements.begin(), z2.elements.end()) ==
        oracle::commutant(oracle::Table(q2().raw())));
  CHECK(z2.elements == std::vector<Element>{1, 2});
  const Subloop c = center(q1());
  CHECK(c.contains(1));
  CHECK(c.is_subset_of(nucleus(q1())));
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const oracle::Table t(L.raw());
    std::set<int> expected;
    const auto n = oracle::nucleus(t);
    for (int x : oracle::commutant(t))
      if (n.contains(x)) expected.insert(x);
    CHECK(as_set(center(L)) == expected);
  }
}

TEST_CASE("normality") {
  for (const auto& key : {"Q1", "Q2", "S3", "D8", "Chein_S3"}) {
    const LoopTable& L = builtin(key).table;
    CHECK(is_normal(L, gen(L, {})));
    CHECK(is_normal(L, whole_loop(L)));
  }
  CHECK(is_normal(q1(), associator_subloop(q1())));
  // The order-2 subgroups of S3 are not normal.
  const LoopTable s3 = make_symmetric3();
  int non_normal = 0;
  for (int x = 2; x <= 6; ++x) {
    const Subloop s = gen(s3, {x});
    if (s.order() == 2 && !is_normal(s3, s)) ++non_normal;
  }
  CHECK(non_normal == 3);
}

TEST_CASE("quotients") {
  const LoopTable& L = q1();
  const Quotient same = quotient(L, gen(L, {}));
  CHECK(same.table.order() == 16);
  CHECK(same.table.raw() == L.raw());
  const Quotient one = quotient(L, whole_loop(L));
  CHECK(one.table.order() == 1);
  const Subloop a = associator_subloop(L);
  const Quotient q = quotient(L, a);
  CHECK(q.table.order() * a.order() == 16);
  CHECK(oracle::associative(oracle::Table(q.table.raw())));
  for (int x = 1; x <= 16; ++x)
    for (int y = 1; y <= 16; ++y) CHECK(q.project(L.mul(x, y)) == q.table.mul(q.project(x), q.project(y)));
  CHECK(q.project(1) == 1);
  // Not normal: coset product ill-defined.
  const LoopTable s3 = make_symmetric3();
  for (int x = 2; x <= 6; ++x) {
    const Subloop s = gen(s3, {x});
    if (s.order() == 2) CHECK_THROWS_AS(quotient(s3, s), LoopError);
  }
}

TEST_CASE("Sylow subloops") {
  const auto z6 = sylow_subloop(make_cyclic(6), 3);
  REQUIRE(z6.subloop);
  CHECK(z6.subloop->order() == 3);
  const auto s1 = sylow_subloop(q1(), 2);
  REQUIRE(s1.subloop);
  CHECK(s1.subloop->is_whole());
  const auto z12 = sylow_subloop(make_cyclic(12), 2);
  REQUIRE(z12.subloop);
  CHECK(z12.subloop->order() == 4);
  CHECK(z12.exact);
  // Every element of the Sylow 2-subgroup of Z12 has 2-power order.
  for (Element x : z12.subloop->elements()) CHECK(4 % element_order(make_cyclic(12), x).order == 0);
  const auto d6 = sylow_subloop(make_dihedral(6), 2);
  REQUIRE(d6.subloop);
  CHECK(d6.subloop->order() == 2);
  CHECK_THROWS_AS(sylow_subloop(q1(), 4), LoopError);
  CHECK(p_part(48, 2) == 16);
  CHECK(p_part(48, 5) == 1);
}

TEST_CASE("Hall 3'-subgroups") {
  const auto z6 = hall_3prime_subgroup(make_cyclic(6));
  REQUIRE(z6.subgroup);
  CHECK(z6.subgroup->order() == 2);
  const auto h1 = hall_3prime_subgroup(q1());
  CHECK(h1.target_order == 16);
  CHECK(h1.closure_order == 16);
  const auto z9 = hall_3prime_subgroup(make_cyclic(9));
  REQUIRE(z9.subgroup);
  CHECK(z9.subgroup->is_trivial());
}

TEST_CASE("direct products") {
  const LoopTable z6 = make_cyclic(6);
  CHECK(is_direct_product(z6, gen(z6, {4}), gen(z6, {3})));
  CHECK(is_direct_product(q1(), gen(q1(), {}), whole_loop(q1())));
  const LoopTable s3 = make_symmetric3();
  Subloop two = gen(s3, {});
  Subloop three = gen(s3, {});
  for (int x = 2; x <= 6; ++x) {
    const Subloop s = gen(s3, {x});
    if (s.order() == 2) two = s;
    if (s.order() == 3) three = s;
  }
  REQUIRE(two.order() == 2);
  REQUIRE(three.order() == 3);
  CHECK_FALSE(is_direct_product(s3, two, three));
  // In Z30, labels 16, 11 and 7 are the values 15, 10 and 6: orders 2, 3, 5.
  const LoopTable z30 = make_cyclic(30);
  const Subloop f[] = {gen(z30, {16}), gen(z30, {11}), gen(z30, {7})};
  CHECK(f[0].order() == 2);
  CHECK(f[1].order() == 3);
  CHECK(f[2].order() == 5);
  CHECK(is_direct_product(z30, f));
  const Subloop g[] = {gen(z30, {16}), gen(z30, {11}), gen(z30, {11})};
  CHECK_FALSE(is_direct_product(z30, g));
}

TEST_CASE("commutative nilpotency class") {
  CHECK(commutative_nilpotency_class(make_cyclic(5)) == 1);
  CHECK_FALSE(commutative_nilpotency_class(make_symmetric3()));
  CHECK(commutative_nilpotency_class(make_dihedral(8)) == 2);
  CHECK(commutative_nilpotency_class(make_quaternion8()) == 2);
  CHECK(prime_divisors(60) == std::vector<int>{2, 3, 5});
}

}  // TEST_SUITE
