#include "loopsmith/report.hpp"

#include <chrono>
#include <vector>

#include "loopsmith/halfmorph.hpp"
#include "loopsmith/inner_maps.hpp"
#include "loopsmith/subloops.hpp"

namespace loopsmith {

using nlohmann::json;

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(json& sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}

  void lap(const char* phase) {
    const auto now = std::chrono::steady_clock::now();
    sink_[phase] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  json& sink_;
  std::chrono::steady_clock::time_point start_;
};

json census_json(const HalfCensus& c) {
  return {{"total", c.total},
          {"iso", c.isomorphisms},
          {"anti", c.anti_isomorphisms},
          {"both", c.both},
          {"proper", c.proper}};
}

json pair_json(const std::optional<std::pair<Element, Element>>& p) {
  if (!p) return nullptr;
  return json::array({p->first, p->second});
}

json witness_json(const std::optional<InnerWitness>& w) {
  if (!w) return nullptr;
  json out{{"family", to_string(w->family)}, {"x", w->x}, {"a", w->a}, {"b", w->b}};
  if (w->family != InnerFamily::T) out["y"] = w->y;
  return out;
}

json subloop_json(const Subloop& s) {
  return {{"order", s.order()}, {"elements", std::vector<Element>(s.elements().begin(), s.elements().end())}};
}

}  // namespace

json validation_json(const ValidationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    json cells = json::array();
    for (const Cell& c : v.cells) cells.push_back({c.row, c.col});
    violations.push_back({{"kind", to_string(v.kind)}, {"cells", cells}, {"message", v.message}});
  }
  return {{"is_quasigroup", report.is_quasigroup},
          {"has_identity", report.has_identity},
          {"identity_index",
           report.identity_index ? json(*report.identity_index) : json(nullptr)},
          {"is_loop", report.clean()},
          {"violations", violations}};
}

json analysis_json(const LoopTable& loop, int max_half_order) {
  json out;
  json elapsed = json::object();
  PhaseTimer timer(elapsed);
  out["name"] = loop.name();
  out["order"] = loop.order();

  const auto moufang = moufang_report(loop);
  const auto left_witness = left_automorphic_witness(loop);
  const auto witness = left_witness ? left_witness : automorphic_witness(loop);
  out["flags"] = {
      {"quasigroup", true},
      {"loop", true},
      {"commutative", is_commutative(loop)},
      {"associative", is_associative(loop)},
      {"diassociative", is_diassociative(loop)},
      {"flexible", is_flexible(loop)},
      {"moufang", moufang.all()},
      {"left_automorphic", !left_witness},
      {"automorphic", !witness},
  };
  out["moufang_identities"] = moufang.identities;
  out["automorphic_witness"] = witness_json(witness);
  timer.lap("properties");

  const Commutant z = commutant(loop);
  out["subloops"] = {
      {"nucleus", subloop_json(nucleus(loop))},
      {"commutant", {{"order", z.elements.size()}, {"elements", z.elements}, {"closed", z.closed}}},
      {"center", subloop_json(center(loop))},
      {"commutator_subloop", subloop_json(commutator_subloop(loop))},
      {"associator_subloop", subloop_json(associator_subloop(loop))},
  };
  const auto nil = commutative_nilpotency_class(loop);
  out["commutative_nilpotency_class"] = nil ? json(*nil) : json(nullptr);
  timer.lap("subloops");

  if (loop.order() > max_half_order) {
    out["half_automorphisms"] = {{"skipped", true}, {"max_half_order", max_half_order}};
  } else {
    const HalfEnumeration all = enumerate_half_automorphisms(loop);
    json counts = census_json(census(all.maps));
    counts["skipped"] = false;
    counts["group_closed"] = half_maps_form_group(all.maps);
    out["half_automorphisms"] = counts;
  }
  timer.lap("half_automorphisms");
  out["elapsed_ms"] = elapsed;
  return out;
}

json half_automorphisms_json(const LoopTable& loop, std::size_t limit) {
  const HalfEnumeration all = enumerate_half_automorphisms(loop, limit);
  json maps = json::array();
  for (const HalfMap& m : all.maps) {
    const HalfClass cls = classify(m);
    maps.push_back({{"cycles", m.perm().cycle_string()},
                    {"images", std::vector<Element>(m.perm().images().begin(), m.perm().images().end())},
                    {"kind", to_string(cls.kind)},
                    {"hom_pairs", cls.hom_pairs},
                    {"anti_pairs", cls.anti_pairs},
                    {"witness_hom", pair_json(cls.witness_hom)},
                    {"witness_anti", pair_json(cls.witness_anti)}});
  }
  json out{{"name", loop.name()},
           {"order", loop.order()},
           {"complete", all.complete},
           {"maps", maps},
           {"census", census_json(census(all.maps))}};
  out["group_closed"] = all.complete ? json(half_maps_form_group(all.maps)) : json(nullptr);
  return out;
}

TheoremRun check_theorem(std::span<const LoopTable> loops, int max_half_order,
                         bool enforce_vacuity) {
  TheoremRun run;
  run.ok = true;
  json loop_reports = json::array();
  std::vector<std::vector<SuiteResult>> per_loop;

  for (const LoopTable& loop : loops) {
    json entry{{"name", loop.name()}, {"order", loop.order()}};
    if (loop.order() > max_half_order) {
      entry["status"] = "skipped";
    } else {
      try {
        const TheoremReport t = verify_main_theorem(loop);
        json witnesses = json::array();
        for (const Perm& p : t.proper_witnesses) witnesses.push_back(p.cycle_string());
        entry["moufang"] = t.moufang;
        entry["automorphic"] = t.automorphic;
        entry["hypotheses_hold"] = t.hypotheses_hold();
        entry["census"] = census_json(t.counts);
        entry["proper_witnesses"] = witnesses;
        entry["status"] = t.hypotheses_hold() ? "theorem-holds"
                          : t.counts.proper ? "hypothesis-failing-proper-half"
                                            : "hypothesis-failing";
      } catch (const LoopError& e) {
        if (e.kind() != ErrorKind::TheoremViolation) throw;
        entry["status"] = "violation";
        entry["error"] = e.what();
        run.ok = false;
      }
    }
    loop_reports.push_back(entry);
    per_loop.push_back(run_all_suites(gather_facts(loop, max_half_order)));
  }

  json suites = json::array();
  for (const SuiteResult& s : merge_suites(per_loop)) {
    const bool passed = s.passed(enforce_vacuity);
    run.ok = run.ok && passed;
    suites.push_back({{"name", s.name},
                      {"guarded", s.guarded},
                      {"hypothesis_count", s.hypothesis_count},
                      {"checks", s.checks},
                      {"violations", s.violations},
                      {"literal_mismatches", s.literal_mismatches},
                      {"vacuous", s.vacuous()},
                      {"passed", passed},
                      {"messages", s.messages}});
  }
  run.report = {{"loops", loop_reports},
                {"suites", suites},
                {"vacuity_enforced", enforce_vacuity},
                {"ok", run.ok}};
  return run;
}

}  // namespace loopsmith
