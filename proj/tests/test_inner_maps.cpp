#include <doctest.h>

#include <set>

#include "loopsmith/catalog.hpp"
#include "loopsmith/inner_maps.hpp"
#include "oracles.hpp"

using namespace loopsmith;

namespace {

const LoopTable& q1() { return builtin("Q1").table; }
const LoopTable& q2() { return builtin("Q2").table; }

std::vector<int> images(const Perm& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST_SUITE("inner_maps") {

TEST_CASE("Perm parsing and printing") {
  const Perm p = Perm::from_cycles("(3,5)(4,6)(7,8)", 8);
  CHECK(p.cycle_string() == "(3,5)(4,6)(7,8)");
  CHECK(p.cycle_string(" ") == "(3 5)(4 6)(7 8)");
  CHECK(Perm::from_cycles("(5 8)", 16) == Perm::from_cycles("(5,8)", 16));
  CHECK(Perm::from_cycles("()", 4).is_identity());
  CHECK(Perm::identity(4).cycle_string() == "()");
  CHECK(Perm::from_cycles("(4,2,3)", 5).cycle_string() == "(2,3,4)");
  CHECK_THROWS_AS(Perm::from_cycles("(1,9)", 8), LoopError);
  CHECK_THROWS_AS(Perm::from_cycles("(1,2)(2,3)", 8), LoopError);
  CHECK_THROWS_AS(Perm({1, 1, 2}), LoopError);
}

TEST_CASE("Perm composition and inverse") {
  const Perm a = Perm::from_cycles("(1,2,3)", 3);
  const Perm b = Perm::from_cycles("(1,2)", 3);
  // (a∘b)(1) = a(2) = 3
  CHECK(a.after(b)(1) == 3);
  CHECK(a.after(a.inverse()).is_identity());
  CHECK(a.after(a).after(a).is_identity());
}

TEST_CASE("translations") {
  for (int n : {1, 4, 7}) CHECK(left_translation(make_cyclic(n), 1).is_identity());
  CHECK(images(left_translation(q1(), 2)) ==
        std::vector<int>{2, 4, 8, 6, 3, 1, 5, 7, 14, 9, 16, 10, 11, 12, 13, 15});
  const auto col5 = images(right_translation(q2(), 5));
  CHECK(col5 == std::vector<int>{5, 6, 7, 8, 1, 2, 3, 4});
}

TEST_CASE("inner mappings match their definitions") {
  for (const auto& key : {"Q1", "Q2", "S3", "Chein_S3"}) {
    const LoopTable& L = builtin(key).table;
    const oracle::Table t(L.raw());
    CHECK(inner_l(L, 1, 1).is_identity());
    for (int x = 1; x <= L.order(); ++x) {
      CHECK(images(inner_t(L, x)) == oracle::inner_t(t, x));
      for (int y = 1; y <= L.order(); ++y) {
        const Perm l = inner_l(L, x, y);
        CHECK(l(1) == 1);
        CHECK(images(l) == oracle::inner_l(t, x, y));
        CHECK(images(inner_r(L, x, y)) == oracle::inner_r(t, x, y));
      }
    }
  }
  const LoopTable z6 = make_cyclic(6);
  for (int x = 1; x <= 6; ++x) CHECK(inner_t(z6, x).is_identity());
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(q1(), Perm::identity(16)));
  CHECK_FALSE(is_automorphism(q2(), Perm::from_cycles("(3,5)(4,6)(7,8)", 8)));
  // Inversion on Z4: 2 <-> 4.
  CHECK(is_automorphism(make_cyclic(4), Perm::from_cycles("(2,4)", 4)));
}

TEST_CASE("automorphic flags against the oracle") {
  for (const auto& key : catalog_keys()) {
    const LoopTable& L = builtin(key).table;
    const oracle::Table t(L.raw());
    INFO(key);
    CHECK(is_left_automorphic(L) == oracle::left_automorphic(t));
    CHECK(is_automorphic(L) == oracle::automorphic(t));
    if (is_associative(L)) CHECK(is_automorphic(L));
  }
  CHECK(is_left_automorphic(q1()));
  CHECK_FALSE(is_automorphic(q1()));
  CHECK(is_automorphic(q2()));
}

TEST_CASE("a witness names a generator that really fails") {
  const auto w = automorphic_witness(q1());
  REQUIRE(w);
  const oracle::Table t(q1().raw());
  std::vector<int> f;
  switch (w->family) {
    case InnerFamily::L: f = oracle::inner_l(t, w->x, w->y); break;
    case InnerFamily::R: f = oracle::inner_r(t, w->x, w->y); break;
    case InnerFamily::T: f = oracle::inner_t(t, w->x); break;
  }
  CHECK(f[t.mul(w->a, w->b) - 1] != t.mul(f[w->a - 1], f[w->b - 1]));
  CHECK_FALSE(left_automorphic_witness(q1()));
}

TEST_CASE("Bruck's l-iff-r equivalence") {
  CHECK(moufang_l_iff_r_check(make_symmetric3()));
  CHECK(moufang_l_iff_r_check(q1()));
  CHECK(moufang_l_iff_r_check(make_chein(make_symmetric3())));
  CHECK_THROWS_AS(moufang_l_iff_r_check(q2()), LoopError);
}

TEST_CASE("group closure") {
  const Perm id = Perm::identity(3);
  const Perm gens1[] = {id};
  CHECK(group_closure(gens1).order == 1u);
  const Perm gens2[] = {Perm::from_cycles("(1,2)", 2)};
  CHECK(group_closure(gens2).order == 2u);
  const Perm s4[] = {Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,2)", 4)};
  CHECK(group_closure(s4).order == 24u);
  const auto capped = group_closure(s4, 10);
  CHECK(capped.capped);
  CHECK_FALSE(capped.order);
  CHECK_THROWS_AS(group_closure(std::span<const Perm>{}), LoopError);
}

TEST_CASE("inner mapping group of Q2 by BFS oracle") {
  const auto gens = inner_generators(q2());
  const auto g = group_closure(gens);
  REQUIRE(g.elements);
  // Independent closure: repeatedly compose until no new permutations appear.
  std::set<std::vector<int>> seen{images(Perm::identity(8))};
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::vector<int>> cur(seen.begin(), seen.end());
    for (const auto& a : cur)
      for (const Perm& p : gens) {
        std::vector<int> c(8);
        for (int z = 0; z < 8; ++z) c[z] = p(a[z]);
        grew = seen.insert(c).second || grew;
      }
  }
  CHECK(*g.order == seen.size());
  // Every inner mapping of an automorphic loop is an automorphism.
  for (const Perm& p : *g.elements) CHECK(is_automorphism(q2(), p));
}

}  // TEST_SUITE
