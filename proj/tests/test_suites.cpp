#include <doctest.h>

#include <array>

#include <nlohmann/json.hpp>

#include "loopsmith/catalog.hpp"
#include "loopsmith/report.hpp"
#include "loopsmith/suites.hpp"
#include "oracles.hpp"

using namespace loopsmith;

namespace {

const SuiteResult& find(const std::vector<SuiteResult>& all, const std::string& name) {
  for (const auto& s : all)
    if (s.name == name) return s;
  throw std::runtime_error("no suite " + name);
}

// Commutative Moufang loop of order 81 on Z3^4:
// x·y = x + y + (0,0,0,(x3 - y3)(x1 y2 - x2 y1)).
LoopTable cml81() {
  auto digits = [](int v) {
    std::array<int, 4> d{};
    for (int i = 0; i < 4; ++i, v /= 3) d[i] = v % 3;
    return d;
  };
  RawTable raw(81, std::vector<int>(81));
  for (int a = 0; a < 81; ++a)
    for (int b = 0; b < 81; ++b) {
      const auto x = digits(a);
      const auto y = digits(b);
      std::array<int, 4> z{};
      for (int i = 0; i < 4; ++i) z[i] = x[i] + y[i];
      z[3] += (x[2] - y[2]) * (x[0] * y[1] - x[1] * y[0]);
      int v = 0;
      for (int i = 3; i >= 0; --i) v = v * 3 + ((z[i] % 3) + 3) % 3;
      raw[a][b] = v + 1;
    }
  return LoopTable::from_raw(raw, "CML81");
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("every suite passes on Q1 and the hypotheses are counted") {
  const LoopFacts f = gather_facts(builtin("Q1").table);
  CHECK(f.moufang);
  CHECK(f.left_automorphic);
  CHECK_FALSE(f.automorphic);
  REQUIRE(f.halves);
  CHECK(f.classes.size() == f.halves->maps.size());
  const auto all = run_all_suites(f);
  for (const auto& s : all) {
    INFO(s.name);
    CHECK(s.violations == 0u);
  }
  CHECK(find(all, "bruck_commutators_in_nucleus").hypothesis_count == 1u);
  CHECK(find(all, "bruck_cubes_in_nucleus").hypothesis_count == 0u);
  CHECK(find(all, "gg_triple_existence").hypothesis_count > 0u);
}

TEST_CASE("the printed commutator expansion needs an associator factor") {
  const auto q1 = suite_bruck_commutator_expansion(gather_facts(builtin("Q1").table));
  CHECK(q1.violations == 0u);
  CHECK(q1.literal_mismatches > 0u);
  const auto d8 = suite_bruck_commutator_expansion(gather_facts(builtin("D8").table));
  CHECK(d8.literal_mismatches == 0u);
}

TEST_CASE("order-81 commutative Moufang loop fixes the exponent to 3") {
  const LoopTable L = cml81();
  const oracle::Table t(L.raw());
  CHECK(oracle::commutative(t));
  CHECK_FALSE(oracle::associative(t));
  const LoopFacts f = gather_facts(L, 20);
  CHECK(f.moufang);
  CHECK(f.automorphic);
  CHECK_FALSE(f.halves);
  const auto r = suite_bruck_commutator_expansion(f);
  CHECK(r.hypothesis_count == 1u);
  CHECK(r.violations == 0u);
  // Commutators vanish and associators have order 3, so the literal form
  // holds here while a single associator factor would not.
  CHECK(r.literal_mismatches == 0u);
  bool nontrivial = false;
  for (int x = 1; x <= t.n && !nontrivial; ++x)
    for (int y = 1; y <= t.n && !nontrivial; ++y)
      for (int z = 1; z <= t.n && !nontrivial; ++z) nontrivial = oracle::associator(t, x, y, z) != 1;
  CHECK(nontrivial);
  CHECK(suite_bruck_cubes_in_nucleus(f).violations == 0u);
  CHECK(suite_bruck_associators_central(f).violations == 0u);
}

TEST_CASE("guarded suites count hypotheses and vacuity is visible") {
  const LoopFacts q2 = gather_facts(builtin("Q2").table);
  const auto r = suite_bruck_commutators_in_nucleus(q2);
  CHECK(r.vacuous());
  CHECK(r.passed(false));
  CHECK_FALSE(r.passed(true));
  const auto theorem = suite_main_theorem(q2);
  CHECK(theorem.hypothesis_count == 0u);
}

TEST_CASE("merging sums counts per suite name") {
  std::vector<std::vector<SuiteResult>> per;
  per.push_back(run_all_suites(gather_facts(builtin("S3").table)));
  per.push_back(run_all_suites(gather_facts(builtin("Q8").table)));
  const auto merged = merge_suites(per);
  CHECK(merged.size() == per[0].size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    CHECK(merged[i].name == per[0][i].name);
    CHECK(merged[i].checks == per[0][i].checks + per[1][i].checks);
    CHECK(merged[i].hypothesis_count == per[0][i].hypothesis_count + per[1][i].hypothesis_count);
  }
}

TEST_CASE("a failing check is reported with a message") {
  SuiteResult r;
  r.name = "x";
  for (int i = 0; i < 9; ++i) r.fail("m" + std::to_string(i));
  CHECK(r.violations == 9u);
  CHECK(r.messages.size() == 5u);
  CHECK_FALSE(r.passed(false));
}

TEST_CASE("analysis report") {
  const auto q2 = analysis_json(builtin("Q2").table);
  CHECK(q2["flags"]["automorphic"] == true);
  CHECK(q2["flags"]["moufang"] == false);
  CHECK(q2["half_automorphisms"]["proper"].get<int>() >= 1);
  const auto q1 = analysis_json(builtin("Q1").table);
  CHECK(q1["flags"]["moufang"] == true);
  CHECK(q1["flags"]["left_automorphic"] == true);
  CHECK(q1["flags"]["automorphic"] == false);
  CHECK_FALSE(q1["automorphic_witness"].is_null());
  CHECK(q1["half_automorphisms"]["proper"].get<int>() >= 1);
  const auto z1 = analysis_json(builtin("Z1").table);
  for (const auto& [k, v] : z1["flags"].items()) CHECK(v == true);
  CHECK(z1["half_automorphisms"]["total"] == 1);
  const auto skipped = analysis_json(builtin("Q1").table, 8);
  CHECK(skipped["half_automorphisms"]["skipped"] == true);
  // associative => moufang => diassociative
  for (const auto& k : catalog_keys()) {
    const auto j = analysis_json(builtin(k).table, 0);
    const auto& fl = j["flags"];
    if (fl["associative"] == true) CHECK(fl["moufang"] == true);
    if (fl["moufang"] == true) CHECK(fl["diassociative"] == true);
    if (fl["automorphic"] == true) CHECK(fl["left_automorphic"] == true);
  }
}

TEST_CASE("theorem run") {
  const LoopTable loops[] = {builtin("S3").table};
  const auto run = check_theorem(loops);
  CHECK(run.ok);
  CHECK(run.report["loops"][0]["status"] == "theorem-holds");
  CHECK(run.report["loops"][0]["census"]["proper"] == 0);
  const LoopTable q[] = {builtin("Q1").table, builtin("Q2").table};
  const auto rq = check_theorem(q);
  CHECK(rq.ok);
  CHECK(rq.report["loops"][0]["status"] == "hypothesis-failing-proper-half");
  CHECK(rq.report["loops"][1]["status"] == "hypothesis-failing-proper-half");
  // Only Q2: the left automorphic Moufang suites have no input.
  const LoopTable only_q2[] = {builtin("Q2").table};
  CHECK(check_theorem(only_q2).ok);
  CHECK_FALSE(check_theorem(only_q2, kDefaultMaxHalfOrder, true).ok);
}

}  // TEST_SUITE
