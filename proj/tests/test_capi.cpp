// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopsmith/loopsmith.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lsm_string_free(s);
  return out;
}

lsm_loop* builtin(const char* key) {
  lsm_loop* l = nullptr;
  REQUIRE(lsm_loop_builtin(key, &l) == LSM_OK);
  return l;
}

}  // namespace

TEST_CASE("handles and products") {
  lsm_loop* q1 = builtin("Q1");
  CHECK(lsm_loop_order(q1) == 16);
  CHECK(std::string(lsm_loop_name(q1)) == "Q1");
  int v = 0;
  CHECK(lsm_mul(q1, 2, 7, &v) == LSM_OK);
  CHECK(v == 5);
  CHECK(lsm_ldiv(q1, 2, 5, &v) == LSM_OK);
  CHECK(v == 7);
  CHECK(lsm_rdiv(q1, 5, 7, &v) == LSM_OK);
  CHECK(v == 2);
  CHECK(lsm_mul(q1, 17, 1, &v) == LSM_ERR_ARGUMENT);
  CHECK(std::string(lsm_last_error()).size() > 0);
  CHECK(lsm_mul(q1, 1, 1, nullptr) == LSM_ERR_ARGUMENT);
  lsm_loop_free(q1);
  lsm_loop_free(nullptr);
}

TEST_CASE("status codes") {
  lsm_loop* l = nullptr;
  CHECK(lsm_loop_builtin("missing", &l) == LSM_ERR_NOT_FOUND);
  CHECK(l == nullptr);
  CHECK(lsm_loop_from_text("2\n1 2\n", 0, &l) == LSM_ERR_PARSE);
  CHECK(lsm_loop_from_text("2\n1 2\n2 2\n", 0, &l) == LSM_ERR_INVALID_LOOP);
  CHECK(lsm_loop_from_file("/nonexistent/x.loop", 0, &l) == LSM_ERR_PARSE);
  CHECK(lsm_loop_from_text("2\n1 2\n2 1\n", 0, &l) == LSM_OK);
  CHECK(lsm_loop_order(l) == 2);
  lsm_loop_free(l);
  CHECK(std::string(lsm_status_string(LSM_ERR_PARSE)) == "parse error");
}

TEST_CASE("tables from cells") {
  const int cells[] = {1, 2, 3, 2, 3, 1, 3, 1, 2};
  lsm_loop* l = nullptr;
  REQUIRE(lsm_loop_from_cells(3, cells, "z3", &l) == LSM_OK);
  int m = 0;
  CHECK(lsm_is_moufang(l, &m) == LSM_OK);
  CHECK(m == 1);
  char* text = nullptr;
  CHECK(lsm_write_loop_text(l, &text) == LSM_OK);
  CHECK(take(text) == "name: z3\n3\n1 2 3\n2 3 1\n3 1 2\n");
  lsm_loop_free(l);
  const int bad[] = {1, 2, 2, 2};
  CHECK(lsm_loop_from_cells(2, bad, nullptr, &l) == LSM_ERR_INVALID_LOOP);
}

TEST_CASE("properties and classification") {
  lsm_loop* q1 = builtin("Q1");
  lsm_loop* q2 = builtin("Q2");
  int b = 0;
  CHECK(lsm_is_left_automorphic(q1, &b) == LSM_OK);
  CHECK(b == 1);
  CHECK(lsm_is_automorphic(q1, &b) == LSM_OK);
  CHECK(b == 0);
  CHECK(lsm_is_automorphic(q2, &b) == LSM_OK);
  CHECK(b == 1);
  char* kind = nullptr;
  CHECK(lsm_classify_cycles(q1, "(5 8)", &kind) == LSM_OK);
  CHECK(take(kind) == "ProperHalf");
  CHECK(lsm_classify_cycles(q2, "(3,5)(4,6)(7,8)", &kind) == LSM_OK);
  CHECK(take(kind) == "ProperHalf");
  CHECK(lsm_classify_cycles(q2, "()", &kind) == LSM_OK);
  CHECK(take(kind) == "Isomorphism");
  CHECK(lsm_classify_cycles(q2, "(2,3)", &kind) == LSM_ERR_ARGUMENT);
  CHECK(kind == nullptr);
  lsm_loop_free(q1);
  lsm_loop_free(q2);
}

TEST_CASE("validation text") {
  char* out = nullptr;
  CHECK(lsm_validate_text("2\n1 2\n2 1\n", 0, &out) == LSM_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["is_loop"] == true);
  CHECK(lsm_validate_text("2\n1 2\n2 2\n", 0, &out) == LSM_ERR_INVALID_LOOP);
  j = nlohmann::json::parse(take(out));
  CHECK(j["is_quasigroup"] == false);
  CHECK(lsm_validate_text("2\n1 2\n", 0, &out) == LSM_ERR_PARSE);
  j = nlohmann::json::parse(take(out));
  CHECK(j["line"].is_number());
}

TEST_CASE("JSON reports") {
  lsm_loop* z4 = builtin("Z4");
  char* out = nullptr;
  CHECK(lsm_halfautos_json(z4, 0, &out) == LSM_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["maps"].size() == 2);
  CHECK(j["group_closed"] == true);
  CHECK(lsm_analyze_json(z4, 20, &out) == LSM_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j["flags"]["commutative"] == true);
  CHECK(lsm_export_json(z4, &out) == LSM_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j["order"] == 4);
  CHECK(lsm_catalog_keys_json(&out) == LSM_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j.size() > 20);

  const lsm_loop* loops[] = {z4};
  CHECK(lsm_check_theorem_json(loops, 1, 20, 0, &out) == LSM_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j["ok"] == true);
  CHECK(lsm_check_theorem_json(loops, 1, 20, 1, &out) == LSM_ERR_THEOREM_VIOLATION);
  j = nlohmann::json::parse(take(out));
  CHECK(j["ok"] == false);
  lsm_loop_free(z4);
}
