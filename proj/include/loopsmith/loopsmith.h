/*
 * loopsmith C API.
 *
 * Loops are opaque handles created by one of the lsm_loop_* constructors and
 * released with lsm_loop_free. Every function returns an lsm_status; on
 * failure, lsm_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with lsm_string_free. Elements are numbered 1..n with the
 * identity at 1.
 */
#ifndef LOOPSMITH_H
#define LOOPSMITH_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(LOOPSMITH_BUILDING)
#define LSM_API __declspec(dllexport)
#else
#define LSM_API __declspec(dllimport)
#endif
#else
#define LSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lsm_loop lsm_loop;

typedef enum lsm_status {
  LSM_OK = 0,
  LSM_ERR_ARGUMENT = 1,
  LSM_ERR_PARSE = 2,        /* malformed .loop text or I/O failure */
  LSM_ERR_INVALID_LOOP = 3, /* table is not a loop (Latin square, identity) */
  LSM_ERR_NOT_FOUND = 4,    /* unknown builtin key */
  LSM_ERR_PRECONDITION = 5,
  LSM_ERR_THEOREM_VIOLATION = 6,
  LSM_ERR_INTERNAL = 7
} lsm_status;

LSM_API const char* lsm_version(void);
LSM_API const char* lsm_status_string(lsm_status status);
/* Message for the last failing call on this thread; "" if none. */
LSM_API const char* lsm_last_error(void);
LSM_API void lsm_string_free(char* s);

LSM_API lsm_status lsm_loop_from_text(const char* text, int normalize, lsm_loop** out);
LSM_API lsm_status lsm_loop_from_file(const char* path, int normalize, lsm_loop** out);
LSM_API lsm_status lsm_loop_builtin(const char* key, lsm_loop** out);
/* cells holds n*n row-major entries; cells[(x-1)*n + (y-1)] = x*y. */
LSM_API lsm_status lsm_loop_from_cells(int n, const int* cells, const char* name, lsm_loop** out);
LSM_API void lsm_loop_free(lsm_loop* loop);

LSM_API int lsm_loop_order(const lsm_loop* loop);
/* Name of the loop; valid until the handle is freed. */
LSM_API const char* lsm_loop_name(const lsm_loop* loop);
LSM_API lsm_status lsm_mul(const lsm_loop* loop, int x, int y, int* out);
LSM_API lsm_status lsm_ldiv(const lsm_loop* loop, int x, int y, int* out);
LSM_API lsm_status lsm_rdiv(const lsm_loop* loop, int y, int x, int* out);

/* Property queries; *out is 0 or 1. */
LSM_API lsm_status lsm_is_moufang(const lsm_loop* loop, int* out);
LSM_API lsm_status lsm_is_automorphic(const lsm_loop* loop, int* out);
LSM_API lsm_status lsm_is_left_automorphic(const lsm_loop* loop, int* out);

/*
 * Half-automorphism check for the permutation given in cycle notation, e.g.
 * "(3,5)(4,6)(7,8)". *kind receives "Isomorphism", "AntiIsomorphism", "Both"
 * or "ProperHalf" (caller frees). A non-half map yields LSM_ERR_ARGUMENT.
 */
LSM_API lsm_status lsm_classify_cycles(const lsm_loop* loop, const char* cycles, char** kind);

/*
 * Validates .loop text without constructing a loop. Writes the validation
 * report as JSON. Returns LSM_OK for a loop, LSM_ERR_INVALID_LOOP for a table
 * that is not a loop and LSM_ERR_PARSE for malformed text (report then holds
 * the diagnostic).
 */
LSM_API lsm_status lsm_validate_text(const char* text, int normalize, char** report_json);

/* Reports as JSON with sorted keys. */
LSM_API lsm_status lsm_analyze_json(const lsm_loop* loop, int max_half_order, char** out);
LSM_API lsm_status lsm_halfautos_json(const lsm_loop* loop, size_t limit, char** out);
/*
 * Runs the main-theorem driver and lemma suites over count loops. Returns
 * LSM_ERR_THEOREM_VIOLATION (with the report still written) when any check
 * fails. enforce_vacuity makes guarded suites with no satisfying input fail.
 */
LSM_API lsm_status lsm_check_theorem_json(const lsm_loop* const* loops, size_t count,
                                          int max_half_order, int enforce_vacuity, char** out);

/* Catalog keys as a JSON array. */
LSM_API lsm_status lsm_catalog_keys_json(char** out);
/* Canonical .loop text. */
LSM_API lsm_status lsm_write_loop_text(const lsm_loop* loop, char** out);
/* {name, order, table, expected}; builtins carry their expectations. */
LSM_API lsm_status lsm_export_json(const lsm_loop* loop, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LOOPSMITH_H */
