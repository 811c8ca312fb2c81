// loopsmith command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 property or theorem failure, 2 input error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "loopsmith/loopsmith.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

int exit_code(lsm_status s) {
  switch (s) {
    case LSM_OK: return kExitOk;
    case LSM_ERR_ARGUMENT:
    case LSM_ERR_PARSE:
    case LSM_ERR_NOT_FOUND: return kExitInput;
    default: return kExitFailure;
  }
}

struct LoopDeleter {
  void operator()(lsm_loop* p) const { lsm_loop_free(p); }
};
using LoopPtr = std::unique_ptr<lsm_loop, LoopDeleter>;

// Takes ownership of a C string returned by the library.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  lsm_string_free(s);
  return out;
}

int report_error(lsm_status s, const std::string& context) {
  std::cerr << "loopsmith: " << context << ": " << lsm_last_error() << "\n";
  return exit_code(s);
}

// Loads "builtin:KEY" or a .loop file path.
lsm_status load(const std::string& spec, bool normalize, LoopPtr& out) {
  lsm_loop* raw = nullptr;
  static const std::string prefix = "builtin:";
  const lsm_status s = spec.rfind(prefix, 0) == 0
                           ? lsm_loop_builtin(spec.substr(prefix.size()).c_str(), &raw)
                           : lsm_loop_from_file(spec.c_str(), normalize, &raw);
  out.reset(raw);
  return s;
}

std::string read_source(const std::string& spec, bool normalize, lsm_status& status) {
  static const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    LoopPtr loop;
    status = load(spec, normalize, loop);
    if (status != LSM_OK) return {};
    char* text = nullptr;
    status = lsm_write_loop_text(loop.get(), &text);
    return take(text);
  }
  std::FILE* f = std::fopen(spec.c_str(), "rb");
  if (!f) {
    status = LSM_ERR_PARSE;
    return {};
  }
  std::string text;
  char buf[4096];
  for (size_t k; (k = std::fread(buf, 1, sizeof buf, f)) > 0;) text.append(buf, k);
  std::fclose(f);
  status = LSM_OK;
  return text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string census_line(const json& c) {
  return "total=" + c["total"].dump() + " iso=" + c["iso"].dump() + " anti=" + c["anti"].dump() +
         " both=" + c["both"].dump() + " proper=" + c["proper"].dump();
}

std::string pair_text(const json& p) {
  if (p.is_null()) return "-";
  return "(" + p[0].dump() + "," + p[1].dump() + ")";
}

int cmd_validate(const std::string& path, bool normalize, bool as_json) {
  lsm_status s = LSM_OK;
  const std::string text = read_source(path, normalize, s);
  if (s != LSM_OK) {
    std::cerr << "loopsmith: cannot read " << path << "\n";
    return exit_code(s);
  }
  char* out = nullptr;
  s = lsm_validate_text(text.c_str(), normalize, &out);
  const json report = json::parse(take(out));
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else if (report.contains("line") && !report.contains("is_quasigroup")) {
    std::cout << path << ": parse error: " << report["error"].get<std::string>() << "\n";
  } else {
    std::cout << path << ": " << (report["is_loop"].get<bool>() ? "loop" : "not a loop") << "\n";
    std::cout << "  quasigroup: " << yes_no(report["is_quasigroup"]) << "\n";
    std::cout << "  identity:   "
              << (report["identity_index"].is_null() ? std::string("none")
                                                     : report["identity_index"].dump())
              << "\n";
    for (const auto& v : report["violations"])
      std::cout << "  " << v["kind"].get<std::string>() << ": " << v["message"].get<std::string>()
                << "\n";
    if (report.contains("error")) std::cout << "  " << report["error"].get<std::string>() << "\n";
  }
  return exit_code(s);
}

int cmd_analyze(const std::string& path, bool normalize, int max_half_order, bool as_json) {
  LoopPtr loop;
  if (lsm_status s = load(path, normalize, loop); s != LSM_OK) return report_error(s, path);
  char* out = nullptr;
  if (lsm_status s = lsm_analyze_json(loop.get(), max_half_order, &out); s != LSM_OK)
    return report_error(s, "analyze");
  const json r = json::parse(take(out));
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << r["name"].get<std::string>() << " (order " << r["order"] << ")\n";
  std::cout << "flags:\n";
  for (const auto& [k, v] : r["flags"].items()) std::cout << "  " << k << ": " << yes_no(v) << "\n";
  if (!r["automorphic_witness"].is_null()) {
    const json& w = r["automorphic_witness"];
    std::cout << "  non-automorphic witness: " << w["family"].get<std::string>() << " x=" << w["x"];
    if (w.contains("y")) std::cout << " y=" << w["y"];
    std::cout << " a=" << w["a"] << " b=" << w["b"] << "\n";
  }
  std::cout << "subloop orders:\n";
  for (const auto& [k, v] : r["subloops"].items()) std::cout << "  " << k << ": " << v["order"] << "\n";
  const json& nil = r["commutative_nilpotency_class"];
  std::cout << "commutative nilpotency class: " << (nil.is_null() ? "none" : nil.dump()) << "\n";
  const json& h = r["half_automorphisms"];
  if (h["skipped"].get<bool>())
    std::cout << "half-automorphisms: skipped (order above " << h["max_half_order"] << ")\n";
  else
    std::cout << "half-automorphisms: " << census_line(h) << "\n";
  std::cout << "elapsed (ms):";
  for (const auto& [k, v] : r["elapsed_ms"].items()) std::cout << " " << k << "=" << v.get<double>();
  std::cout << "\n";
  return kExitOk;
}

int cmd_halfautos(const std::string& path, bool normalize, size_t limit, bool classify_maps,
                  bool as_json) {
  LoopPtr loop;
  if (lsm_status s = load(path, normalize, loop); s != LSM_OK) return report_error(s, path);
  char* out = nullptr;
  if (lsm_status s = lsm_halfautos_json(loop.get(), limit, &out); s != LSM_OK)
    return report_error(s, "halfautos");
  const json r = json::parse(take(out));
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& m : r["maps"]) {
    std::cout << m["cycles"].get<std::string>();
    if (classify_maps)
      std::cout << "  " << m["kind"].get<std::string>() << "  hom_pairs=" << m["hom_pairs"]
                << " anti_pairs=" << m["anti_pairs"] << " witness_hom=" << pair_text(m["witness_hom"])
                << " witness_anti=" << pair_text(m["witness_anti"]);
    std::cout << "\n";
  }
  std::cout << "census: " << census_line(r["census"])
            << (r["complete"].get<bool>() ? "" : " (truncated)") << "\n";
  if (!r["group_closed"].is_null())
    std::cout << "closed under composition and inverse: " << yes_no(r["group_closed"]) << "\n";
  return kExitOk;
}

int cmd_checktheorem(const std::vector<std::string>& paths, bool catalog, bool normalize,
                     int max_half_order, bool as_json) {
  std::vector<std::string> specs = paths;
  if (catalog) {
    char* keys = nullptr;
    if (lsm_status s = lsm_catalog_keys_json(&keys); s != LSM_OK) return report_error(s, "catalog");
    for (const auto& k : json::parse(take(keys))) specs.push_back("builtin:" + k.get<std::string>());
  }
  if (specs.empty()) {
    std::cerr << "loopsmith: checktheorem needs input paths or --catalog\n";
    return kExitInput;
  }
  std::vector<LoopPtr> loops;
  for (const auto& spec : specs) {
    LoopPtr loop;
    if (lsm_status s = load(spec, normalize, loop); s != LSM_OK) return report_error(s, spec);
    loops.push_back(std::move(loop));
  }
  std::vector<const lsm_loop*> handles;
  for (const auto& l : loops) handles.push_back(l.get());

  char* out = nullptr;
  const lsm_status s =
      lsm_check_theorem_json(handles.data(), handles.size(), max_half_order, catalog, &out);
  if (!out) return report_error(s, "checktheorem");
  const json r = json::parse(take(out));
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    for (const auto& l : r["loops"]) {
      std::cout << l["name"].get<std::string>() << " (order " << l["order"]
                << "): " << l["status"].get<std::string>();
      if (l.contains("census")) std::cout << "  " << census_line(l["census"]);
      if (l.contains("proper_witnesses") && !l["proper_witnesses"].empty())
        std::cout << "  e.g. " << l["proper_witnesses"][0].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "suites:\n";
    for (const auto& su : r["suites"]) {
      std::cout << "  " << (su["passed"].get<bool>() ? "ok  " : "FAIL") << " "
                << su["name"].get<std::string>() << "  hypothesis=" << su["hypothesis_count"]
                << " checks=" << su["checks"] << " violations=" << su["violations"];
      if (su["literal_mismatches"].get<std::size_t>() != 0)
        std::cout << " literal_mismatches=" << su["literal_mismatches"];
      if (su["vacuous"].get<bool>()) std::cout << " (vacuous)";
      std::cout << "\n";
      for (const auto& msg : su["messages"]) std::cout << "       " << msg.get<std::string>() << "\n";
    }
    std::cout << (r["ok"].get<bool>() ? "all checks passed" : "checks FAILED") << "\n";
  }
  return s == LSM_OK ? kExitOk : exit_code(s);
}

int cmd_catalog(const std::string& key, bool as_json) {
  if (key.empty()) {
    char* keys = nullptr;
    if (lsm_status s = lsm_catalog_keys_json(&keys); s != LSM_OK) return report_error(s, "catalog");
    const json list = json::parse(take(keys));
    if (as_json) {
      std::cout << list.dump(2) << "\n";
    } else {
      for (const auto& k : list) std::cout << k.get<std::string>() << "\n";
    }
    return kExitOk;
  }
  LoopPtr loop;
  if (lsm_status s = load("builtin:" + key, false, loop); s != LSM_OK) return report_error(s, key);
  char* out = nullptr;
  const lsm_status s = as_json ? lsm_export_json(loop.get(), &out)
                               : lsm_write_loop_text(loop.get(), &out);
  if (s != LSM_OK) return report_error(s, key);
  const std::string text = take(out);
  std::cout << text;
  if (as_json) std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopsmith: finite loop and half-automorphism toolkit"};
  app.require_subcommand(1);
  bool normalize = false;
  app.add_flag("--normalize", normalize, "Relabel a non-1 identity to 1 on load");

  std::string path;
  bool as_json = false;
  int max_half_order = 20;
  size_t limit = 0;
  bool classify_maps = false;
  bool catalog = false;
  std::vector<std::string> paths;
  std::string key;

  auto* validate = app.add_subcommand("validate", "Parse and validate a .loop file");
  validate->add_option("path", path, ".loop file or builtin:KEY")->required();
  validate->add_flag("--json", as_json, "JSON output");

  auto* analyze = app.add_subcommand("analyze", "Properties, subloops and half-automorphism census");
  analyze->add_option("path", path, ".loop file or builtin:KEY")->required();
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_option("--max-half-order", max_half_order, "Skip the census above this order")
      ->check(CLI::NonNegativeNumber);

  auto* halfautos = app.add_subcommand("halfautos", "Enumerate half-automorphisms");
  halfautos->add_option("path", path, ".loop file or builtin:KEY")->required();
  halfautos->add_option("--limit", limit, "Stop after N maps (0 = all)");
  halfautos->add_flag("--classify", classify_maps, "Print each map's class and witnesses");
  halfautos->add_flag("--json", as_json, "JSON output");

  auto* check = app.add_subcommand("checktheorem", "Main theorem and lemma suites");
  check->add_option("paths", paths, ".loop files or builtin:KEY");
  check->add_flag("--catalog", catalog, "Run over every builtin loop");
  check->add_option("--max-half-order", max_half_order, "Skip enumeration above this order")
      ->check(CLI::NonNegativeNumber);
  check->add_flag("--json", as_json, "JSON output");

  auto* cat = app.add_subcommand("catalog", "List builtin loops or print one as .loop text");
  cat->add_option("key", key, "Builtin key");
  cat->add_flag("--json", as_json, "JSON output");

  for (auto* sub : {validate, analyze, halfautos, check, cat})
    sub->add_flag("--normalize", normalize, "Relabel a non-1 identity to 1 on load");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(path, normalize, as_json);
    if (*analyze) return cmd_analyze(path, normalize, max_half_order, as_json);
    if (*halfautos) return cmd_halfautos(path, normalize, limit, classify_maps, as_json);
    if (*check) return cmd_checktheorem(paths, catalog, normalize, max_half_order, as_json);
    if (*cat) return cmd_catalog(key, as_json);
  } catch (const std::exception& e) {
    std::cerr << "loopsmith: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitInput;
}
