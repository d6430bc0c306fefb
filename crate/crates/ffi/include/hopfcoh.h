#ifndef HOPFCOH_H
#define HOPFCOH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every call. The numeric values match the command-line exit codes where they overlap.
 */
typedef enum HopfcohStatus {
  HOPFCOH_STATUS_OK = 0,
  /**
   * An object failed its axioms or a hypothesis (for example cosemisimplicity) does not hold.
   */
  HOPFCOH_STATUS_VALIDATION = 1,
  /**
   * A suite check failed.
   */
  HOPFCOH_STATUS_CHECK_FAILED = 2,
  /**
   * Malformed input or an unknown name.
   */
  HOPFCOH_STATUS_PARSE = 3,
  /**
   * A required pointer argument was null.
   */
  HOPFCOH_STATUS_NULL_ARGUMENT = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  HOPFCOH_STATUS_INVALID_UTF8 = 5,
  /**
   * An output buffer is too short; the required length was written where documented.
   */
  HOPFCOH_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * A computation would exceed the resource cap.
   */
  HOPFCOH_STATUS_RESOURCE_LIMIT = 7,
  /**
   * An internal panic was caught at the boundary.
   */
  HOPFCOH_STATUS_INTERNAL = 8,
} HopfcohStatus;

/**
 * A loaded, validated workspace.
 */
typedef struct HopfcohWorkspace HopfcohWorkspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread. Valid until the next call on the thread.
 */
const char *hopfcoh_last_error(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hopfcoh_string_free(char *s);

/**
 * Parses and validates a workspace from its JSON text.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum HopfcohStatus hopfcoh_workspace_parse(const char *json, struct HopfcohWorkspace **out);

/**
 * Loads one of the shipped fixture workspaces by name.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
enum HopfcohStatus hopfcoh_workspace_fixture(const char *name, struct HopfcohWorkspace **out);

/**
 * Frees a workspace. Null is ignored.
 *
 * # Safety
 * `ws` must come from this library and not have been freed.
 */
void hopfcoh_workspace_free(struct HopfcohWorkspace *ws);

/**
 * The canonical JSON text of a workspace.
 *
 * # Safety
 * `ws` must be a live handle and `out` a valid pointer.
 */
enum HopfcohStatus hopfcoh_workspace_to_json(const struct HopfcohWorkspace *ws, char **out);

/**
 * `dim R^p(M)` for `p = 0..=qmax` of the comodule named `comodule`. `dims` must hold
 * `qmax + 1` entries; `written` receives the number of degrees.
 *
 * # Safety
 * Pointers must be valid; `dims` must have room for `capacity` entries.
 */
enum HopfcohStatus hopfcoh_derived_coinvariants(const struct HopfcohWorkspace *ws,
                                                const char *comodule,
                                                size_t qmax,
                                                size_t *dims,
                                                size_t capacity,
                                                size_t *written);

/**
 * `dim Ext^p_H(M, N)` for `p = 0..=qmax`; buffer rules as in [`hopfcoh_derived_coinvariants`].
 *
 * # Safety
 * Pointers must be valid; `dims` must have room for `capacity` entries.
 */
enum HopfcohStatus hopfcoh_ext(const struct HopfcohWorkspace *ws,
                               const char *source,
                               const char *target,
                               size_t qmax,
                               size_t *dims,
                               size_t capacity,
                               size_t *written);

/**
 * Runs a `compute` target and returns its JSON report. `object`, `source`, `target_object`
 * and `hopf` may be null.
 *
 * # Safety
 * Non-null strings must be nul-terminated; `ws` must be live and `out` valid.
 */
enum HopfcohStatus hopfcoh_compute(const struct HopfcohWorkspace *ws,
                                   const char *target,
                                   const char *object,
                                   const char *source,
                                   const char *target_object,
                                   const char *hopf,
                                   size_t qmax,
                                   char **out);

/**
 * Runs the theorem suite (`selector` is `all`, a group or a check name) and returns the JSON
 * report. Returns `CheckFailed` when a check fails; the report is written either way.
 *
 * # Safety
 * `selector` must be nul-terminated; `ws` must be live and `out` valid.
 */
enum HopfcohStatus hopfcoh_check(const struct HopfcohWorkspace *ws,
                                 const char *selector,
                                 size_t pmax,
                                 uint64_t seed,
                                 char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFCOH_H */
