#include "loopsmith/loopsmith.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopsmith/catalog.hpp"
#include "loopsmith/halfmorph.hpp"
#include "loopsmith/inner_maps.hpp"
#include "loopsmith/report.hpp"

struct lsm_loop {
  loopsmith::CatalogEntry entry;
};

namespace {

using loopsmith::ErrorKind;
using loopsmith::LoopError;

thread_local std::string g_last_error;

lsm_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Argument: return LSM_ERR_ARGUMENT;
    case ErrorKind::Parse: return LSM_ERR_PARSE;
    case ErrorKind::InvalidLoop: return LSM_ERR_INVALID_LOOP;
    case ErrorKind::NotFound: return LSM_ERR_NOT_FOUND;
    case ErrorKind::Precondition: return LSM_ERR_PRECONDITION;
    case ErrorKind::TheoremViolation: return LSM_ERR_THEOREM_VIOLATION;
    case ErrorKind::Internal: return LSM_ERR_INTERNAL;
  }
  return LSM_ERR_INTERNAL;
}

lsm_status fail(lsm_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
lsm_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const LoopError& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LSM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LSM_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lsm_status emit(char** out, const std::string& s) {
  *out = dup_string(s);
  return LSM_OK;
}

#define LSM_REQUIRE(cond)                                               \
  do {                                                                  \
    if (!(cond)) return fail(LSM_ERR_ARGUMENT, "null argument: " #cond); \
  } while (0)

lsm_status new_loop(loopsmith::CatalogEntry entry, lsm_loop** out) {
  *out = new lsm_loop{std::move(entry)};
  return LSM_OK;
}

}  // namespace

extern "C" {

const char* lsm_version(void) { return "0.1.0"; }

const char* lsm_status_string(lsm_status status) {
  switch (status) {
    case LSM_OK: return "ok";
    case LSM_ERR_ARGUMENT: return "invalid argument";
    case LSM_ERR_PARSE: return "parse error";
    case LSM_ERR_INVALID_LOOP: return "not a loop";
    case LSM_ERR_NOT_FOUND: return "not found";
    case LSM_ERR_PRECONDITION: return "precondition failed";
    case LSM_ERR_THEOREM_VIOLATION: return "theorem violation";
    case LSM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lsm_last_error(void) { return g_last_error.c_str(); }

void lsm_string_free(char* s) { std::free(s); }

lsm_status lsm_loop_from_text(const char* text, int normalize, lsm_loop** out) {
  LSM_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { return new_loop(loopsmith::parse_loop_file(text, normalize != 0), out); });
}

lsm_status lsm_loop_from_file(const char* path, int normalize, lsm_loop** out) {
  LSM_REQUIRE(path && out);
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(LSM_ERR_PARSE, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return lsm_loop_from_text(buf.str().c_str(), normalize, out);
}

lsm_status lsm_loop_builtin(const char* key, lsm_loop** out) {
  LSM_REQUIRE(key && out);
  *out = nullptr;
  return guarded([&] { return new_loop(loopsmith::builtin(key), out); });
}

lsm_status lsm_loop_from_cells(int n, const int* cells, const char* name, lsm_loop** out) {
  LSM_REQUIRE(cells && out);
  *out = nullptr;
  if (n < 1) return fail(LSM_ERR_ARGUMENT, "order must be positive");
  return guarded([&] {
    loopsmith::RawTable raw(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) raw[x][y] = cells[x * n + y];
    auto table = loopsmith::LoopTable::from_raw(raw, name ? name : "");
    return new_loop({table.name(), table, {}}, out);
  });
}

void lsm_loop_free(lsm_loop* loop) { delete loop; }

int lsm_loop_order(const lsm_loop* loop) { return loop ? loop->entry.table.order() : 0; }

const char* lsm_loop_name(const lsm_loop* loop) {
  return loop ? loop->entry.table.name().c_str() : "";
}

lsm_status lsm_mul(const lsm_loop* loop, int x, int y, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loop->entry.table.mul(x, y); return LSM_OK; });
}

lsm_status lsm_ldiv(const lsm_loop* loop, int x, int y, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loop->entry.table.ldiv(x, y); return LSM_OK; });
}

lsm_status lsm_rdiv(const lsm_loop* loop, int y, int x, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loop->entry.table.rdiv(y, x); return LSM_OK; });
}

lsm_status lsm_is_moufang(const lsm_loop* loop, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loopsmith::is_moufang(loop->entry.table); return LSM_OK; });
}

lsm_status lsm_is_automorphic(const lsm_loop* loop, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loopsmith::is_automorphic(loop->entry.table); return LSM_OK; });
}

lsm_status lsm_is_left_automorphic(const lsm_loop* loop, int* out) {
  LSM_REQUIRE(loop && out);
  return guarded([&] { *out = loopsmith::is_left_automorphic(loop->entry.table); return LSM_OK; });
}

lsm_status lsm_classify_cycles(const lsm_loop* loop, const char* cycles, char** kind) {
  LSM_REQUIRE(loop && cycles && kind);
  *kind = nullptr;
  return guarded([&] {
    const auto& t = loop->entry.table;
    const auto perm = loopsmith::Perm::from_cycles(cycles, t.order());
    const auto map = loopsmith::make_half_map(t, perm);
    return emit(kind, loopsmith::to_string(loopsmith::classify(map).kind));
  });
}

lsm_status lsm_validate_text(const char* text, int normalize, char** report_json) {
  LSM_REQUIRE(text && report_json);
  *report_json = nullptr;
  return guarded([&] {
    try {
      const auto entry = loopsmith::parse_loop_file(text, normalize != 0);
      auto j = loopsmith::validation_json(loopsmith::validate(entry.table.raw()));
      j["name"] = entry.table.name();
      j["order"] = entry.table.order();
      return emit(report_json, j.dump(2));
    } catch (const loopsmith::LoopFileError& e) {
      nlohmann::json j{{"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
      emit(report_json, j.dump(2));
      return fail(LSM_ERR_PARSE, e.what());
    } catch (const loopsmith::ValidationError& e) {
      auto j = loopsmith::validation_json(e.report());
      j["error"] = e.what();
      emit(report_json, j.dump(2));
      const auto s = e.report().has_parse_level_violation() ? LSM_ERR_PARSE : LSM_ERR_INVALID_LOOP;
      return fail(s, e.what());
    }
  });
}

lsm_status lsm_analyze_json(const lsm_loop* loop, int max_half_order, char** out) {
  LSM_REQUIRE(loop && out);
  *out = nullptr;
  return guarded([&] {
    return emit(out, loopsmith::analysis_json(loop->entry.table, max_half_order).dump(2));
  });
}

lsm_status lsm_halfautos_json(const lsm_loop* loop, size_t limit, char** out) {
  LSM_REQUIRE(loop && out);
  *out = nullptr;
  return guarded([&] {
    return emit(out, loopsmith::half_automorphisms_json(loop->entry.table, limit).dump(2));
  });
}

lsm_status lsm_check_theorem_json(const lsm_loop* const* loops, size_t count, int max_half_order,
                                  int enforce_vacuity, char** out) {
  LSM_REQUIRE((loops || count == 0) && out);
  *out = nullptr;
  return guarded([&] {
    std::vector<loopsmith::LoopTable> tables;
    tables.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!loops[i]) return fail(LSM_ERR_ARGUMENT, "null loop handle");
      tables.push_back(loops[i]->entry.table);
    }
    const auto run = loopsmith::check_theorem(tables, max_half_order, enforce_vacuity != 0);
    emit(out, run.report.dump(2));
    return run.ok ? LSM_OK : fail(LSM_ERR_THEOREM_VIOLATION, "theorem check failed");
  });
}

lsm_status lsm_catalog_keys_json(char** out) {
  LSM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { return emit(out, nlohmann::json(loopsmith::catalog_keys()).dump()); });
}

lsm_status lsm_write_loop_text(const lsm_loop* loop, char** out) {
  LSM_REQUIRE(loop && out);
  *out = nullptr;
  return guarded([&] { return emit(out, loopsmith::write_loop_file(loop->entry)); });
}

lsm_status lsm_export_json(const lsm_loop* loop, char** out) {
  LSM_REQUIRE(loop && out);
  *out = nullptr;
  return guarded([&] { return emit(out, loopsmith::export_json(loop->entry)); });
}

}  // extern "C"
