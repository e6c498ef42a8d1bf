#ifndef SIZETT_H
#define SIZETT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; the first four match the command-line exit codes.
typedef enum SizettStatus {
  SIZETT_STATUS_OK = 0,
  SIZETT_STATUS_TYPE_ERROR = 1,
  SIZETT_STATUS_PARSE_ERROR = 2,
  SIZETT_STATUS_IO_ERROR = 3,
  SIZETT_STATUS_INVALID_ARGUMENT = 4,
  SIZETT_STATUS_PANIC = 5,
} SizettStatus;

// A checking session: the prelude plus every file loaded into it.
typedef struct SizettSession SizettSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a session with the prelude loaded. Returns null on failure; the
// reason is available from `sizett_last_error`.
struct SizettSession *sizett_session_new(bool allow_axioms);

// Release a session. Null is ignored.
//
// # Safety
// `s` must come from `sizett_session_new` and not be used afterwards.
void sizett_session_free(struct SizettSession *s);

// Check a `.smltt` file, or every file of a directory in manifest order.
//
// # Safety
// `s` must be a live session and `path` a NUL-terminated string.
enum SizettStatus sizett_load_path(struct SizettSession *s, const char *path);

// Number of declarations checked so far, prelude included.
//
// # Safety
// `s` must be a live session or null.
uintptr_t sizett_declaration_count(const struct SizettSession *s);

// The normalised type of a global name or closed expression.
//
// # Safety
// `s` must be a live session, `expr` a NUL-terminated string and `out`
// writable.
enum SizettStatus sizett_type_of(struct SizettSession *s, const char *expr, char **out);

// Normal form of a global's body or of a closed expression; `unfold`
// also unfolds definitions.
//
// # Safety
// As for `sizett_type_of`.
enum SizettStatus sizett_normalize(struct SizettSession *s,
                                   const char *expr,
                                   bool unfold,
                                   char **out);

// Axioms a global depends on, as `{a, b}`.
//
// # Safety
// As for `sizett_type_of`.
enum SizettStatus sizett_used_axioms(struct SizettSession *s, const char *name, char **out);

// Run model-oracle vectors (the shipped set when `text` is null). Writes
// one `pass`/`FAIL` line per vector; `TypeError` means some vector failed.
//
// # Safety
// `text` must be null or NUL-terminated and `out` writable.
enum SizettStatus sizett_model_test(const char *text, uint64_t fuel, char **out);

// Free a string returned by this library. Null is ignored.
//
// # Safety
// `p` must come from this library and not be freed twice.
void sizett_string_free(char *p);

// Message of the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *sizett_last_error(void);

// Diagnostic kind of the last failure (`TypeMismatch`, `SyntaxError`, ...).
const char *sizett_last_error_kind(void);

// Library version, static.
const char *sizett_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIZETT_H */
