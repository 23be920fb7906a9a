#ifndef ORIENTCOMP_H
#define ORIENTCOMP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Output formats for [`oc_pog_render`].
typedef enum OcFormat {
  OC_FORMAT_NATIVE = 0,
  OC_FORMAT_DOT = 1,
} OcFormat;

// Result codes. `OC_STATUS_NO` is a definite negative answer, not an error.
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NO = 1,
  OC_STATUS_NULL_ARGUMENT = 2,
  OC_STATUS_INVALID_UTF8 = 3,
  OC_STATUS_PARSE = 4,
  OC_STATUS_INVALID_INPUT = 5,
  OC_STATUS_SIZE_GUARD = 6,
  OC_STATUS_UNSUPPORTED = 7,
  OC_STATUS_PANIC = 8,
} OcStatus;

// A partially oriented graph.
typedef struct OcPog OcPog;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses the native line format (`v`, `edge`, `arc` lines).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum OcStatus oc_pog_parse(const char *text, struct OcPog **out);

// Releases a pog. Null is ignored.
//
// # Safety
// `p` must come from this library and not be freed twice.
void oc_pog_free(struct OcPog *p);

// Number of vertices, or 0 for null.
//
// # Safety
// `p` must be null or a live handle.
uintptr_t oc_pog_vertex_count(const struct OcPog *p);

// Renders the pog as text.
//
// # Safety
// `p` must be a live handle and `out` a writable pointer.
enum OcStatus oc_pog_render(const struct OcPog *p, enum OcFormat format, char **out);

// Completes `p` to the named class (`lt`, `acyclic-lt`, `ltlt-friendly`,
// `ltt-exact`, `transitive`, `in-tournament`, `quasi-transitive`, `strong`,
// `cycle-factor`).
//
// On `OC_STATUS_OK` or `OC_STATUS_NO`, `report_json` receives the JSON
// report: the arcs of the completion or a certificate.
//
// # Safety
// `p` must be a live handle, `class` a NUL-terminated string and
// `report_json` a writable pointer.
enum OcStatus oc_complete(const struct OcPog *p, const char *class_, char **report_json);

// Writes the structural predicates of the arc digraph as JSON.
//
// # Safety
// `p` must be a live handle and `out` a writable pointer.
enum OcStatus oc_classify(const struct OcPog *p, char **out);

// Checks a certificate given as JSON. Returns `OC_STATUS_OK` when it
// refutes `p` and `OC_STATUS_NO` when it does not.
//
// # Safety
// `p` must be a live handle and `certificate_json` a NUL-terminated string.
enum OcStatus oc_verify_certificate(const struct OcPog *p, const char *certificate_json);

// Builds the reduction instance of a DIMACS 3-CNF formula.
//
// # Safety
// `dimacs` must be a NUL-terminated string and `out` a writable pointer.
enum OcStatus oc_reduce_3sat(const char *dimacs, struct OcPog **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void oc_string_free(char *s);

// The message of the last failure on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *oc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORIENTCOMP_H */
