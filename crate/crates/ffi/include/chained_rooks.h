#ifndef CHAINED_ROOKS_H
#define CHAINED_ROOKS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/* Pass as `m` to mean the maximum number of rooks. */
#define CR_MAX_ROOKS SIZE_MAX



typedef enum CrCountMethod {
  /**
   * The general sum over compositions, any m.
   */
  CR_COUNT_METHOD_FORMULA = 0,
  /**
   * The product formula, maximum m only.
   */
  CR_COUNT_METHOD_CLOSED = 1,
  CR_COUNT_METHOD_BRUTE = 2,
} CrCountMethod;

typedef enum CrFamily {
  CR_FAMILY_PLACEMENTS = 0,
  CR_FAMILY_PERMUTATIONS = 1,
  CR_FAMILY_ASM = 2,
} CrFamily;

typedef enum CrForm {
  CR_FORM_MATRIX = 0,
  CR_FORM_ONE_LINE = 1,
  CR_FORM_MATCHING = 2,
  CR_FORM_ASM = 3,
  CR_FORM_MT = 4,
  CR_FORM_ICE = 5,
  CR_FORM_FPL = 6,
} CrForm;

typedef enum CrFormat {
  CR_FORMAT_ASCII = 0,
  CR_FORMAT_DOT = 1,
} CrFormat;

typedef enum CrShape {
  CR_SHAPE_LINEAR = 0,
  CR_SHAPE_CIRCULAR = 1,
} CrShape;

typedef enum CrStatus {
  CR_STATUS_OK = 0,
  CR_STATUS_NULL_ARGUMENT = 1,
  /**
   * Out-of-range board size, index or enum value.
   */
  CR_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The operation is not defined for this board or object.
   */
  CR_STATUS_UNSUPPORTED = 3,
  CR_STATUS_PARSE = 4,
  /**
   * An object failed its validator.
   */
  CR_STATUS_INVALID = 5,
  /**
   * A well-formed object is not of the kind required, e.g. an ASM with a
   * -1 entry where a permutation is needed.
   */
  CR_STATUS_CONSTRAINT = 6,
  CR_STATUS_INTERNAL = 7,
  CR_STATUS_PANIC = 8,
} CrStatus;

typedef struct CrBoard CrBoard;

typedef struct CrDocument CrDocument;

typedef struct CrDocumentList CrDocumentList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *cr_version(void);

/**
 * Message of the last failed call on this thread, or NULL. Owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *cr_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void cr_string_free(char *s);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum CrStatus cr_board_new(enum CrShape shape, size_t n, size_t k, struct CrBoard **out);

/**
 * # Safety
 * `board` must be NULL or a handle from [`cr_board_new`], not yet freed.
 */
void cr_board_free(struct CrBoard *board);

/**
 * # Safety
 * `board` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_board_max_rooks(const struct CrBoard *board, size_t *out);

/**
 * Number of placements of `m` non-attacking rooks, as a decimal string.
 *
 * # Safety
 * `board` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_count_placements(const struct CrBoard *board,
                                  size_t m,
                                  enum CrCountMethod method,
                                  char **out);

/**
 * Number of chained ASMs on `board`, as a decimal string.
 *
 * # Safety
 * `board` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_count_chained_asm(const struct CrBoard *board, char **out);

/**
 * Parses a document. Only structure is checked; see
 * [`cr_document_validate`].
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` valid for writes.
 */
enum CrStatus cr_document_parse(const char *text, struct CrDocument **out);

/**
 * # Safety
 * `doc` must be NULL or a handle from this library, not yet freed. Handles
 * borrowed from a list must not be passed here.
 */
void cr_document_free(struct CrDocument *doc);

/**
 * Canonical text of `doc`.
 *
 * # Safety
 * `doc` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_document_serialize(const struct CrDocument *doc, char **out);

/**
 * Family name of `doc` as a static string, or NULL if `doc` is NULL.
 *
 * # Safety
 * `doc` must be NULL or a live handle.
 */
const char *cr_document_family(const struct CrDocument *doc);

/**
 * Returns `Ok` for a valid object and `Invalid` otherwise. When
 * `diagnostics` is not NULL it receives the problems, one per line (an
 * empty string when valid).
 *
 * # Safety
 * `doc` must be a live handle; `diagnostics` NULL or valid for writes.
 */
enum CrStatus cr_document_validate(const struct CrDocument *doc, char **diagnostics);

/**
 * Converts between descriptions of one chained permutation or chained ASM.
 *
 * # Safety
 * `doc` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_document_convert(const struct CrDocument *doc,
                                  enum CrForm to,
                                  struct CrDocument **out);

/**
 * # Safety
 * `doc` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_document_render(const struct CrDocument *doc, enum CrFormat format, char **out);

/**
 * Every placement of `m` rooks (`CR_MAX_ROOKS` for the maximum), every
 * chained permutation, or every chained ASM on `board`, in lexicographic
 * order. `limit` caps the number collected; 0 means no cap.
 *
 * # Safety
 * `board` must be a live handle and `out` valid for writes.
 */
enum CrStatus cr_enumerate(const struct CrBoard *board,
                           enum CrFamily family,
                           size_t m,
                           size_t limit,
                           struct CrDocumentList **out);

/**
 * # Safety
 * `list` must be NULL or a live handle.
 */
size_t cr_document_list_len(const struct CrDocumentList *list);

/**
 * Borrowed element `index`, or NULL when out of range. The pointer is
 * valid until the list is freed and must not be passed to
 * [`cr_document_free`].
 *
 * # Safety
 * `list` must be NULL or a live handle.
 */
const struct CrDocument *cr_document_list_get(const struct CrDocumentList *list, size_t index);

/**
 * # Safety
 * `list` must be NULL or a handle from [`cr_enumerate`], not yet freed.
 */
void cr_document_list_free(struct CrDocumentList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHAINED_ROOKS_H */
