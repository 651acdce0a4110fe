/* C interface to the morphic library.
 *
 * Every function returns a morphic_status. On an error status the message
 * is available from morphic_last_error() on the same thread. Strings
 * returned through char** are heap-allocated; release them with
 * morphic_string_free(). Words are digit strings.
 */
#ifndef MORPHIC_H
#define MORPHIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define MORPHIC_API __attribute__((visibility("default")))
#else
#define MORPHIC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum morphic_status {
  MORPHIC_OK = 0,
  MORPHIC_REFUTED = 1, /* violation found, verification failed, or no such object */
  MORPHIC_ERR_SYNTAX = 2,
  MORPHIC_ERR_RESOURCE = 3,
  MORPHIC_ERR_DOMAIN = 4,
  MORPHIC_ERR_IO = 5,
  MORPHIC_ERR_ALPHABET = 6,
  MORPHIC_ERR_INTERNAL = 7
} morphic_status;

typedef struct morphic_morphism morphic_morphism;
typedef struct morphic_constraints morphic_constraints;
typedef struct morphic_manifest morphic_manifest;

MORPHIC_API const char* morphic_version(void);
MORPHIC_API const char* morphic_last_error(void);
MORPHIC_API const char* morphic_status_name(morphic_status status);
MORPHIC_API void morphic_string_free(char* s);

/* ---- search options ---- */

typedef void (*morphic_progress_fn)(uint64_t nodes, size_t depth, void* user);

typedef struct morphic_search_options {
  uint64_t node_budget;      /* letter appends tried */
  double time_limit_seconds; /* 0 = none */
  unsigned workers;
  int descending_letters;
  morphic_progress_fn progress; /* may be NULL; called from search threads */
  void* progress_user;
} morphic_search_options;

MORPHIC_API void morphic_search_options_init(morphic_search_options* opts);

/* ---- morphisms ---- */

/* Slash format ("012/02/1", empty segments are empty images) or a catalog name such as "b3". */
MORPHIC_API morphic_status morphic_morphism_parse(const char* text, morphic_morphism** out);
MORPHIC_API void morphic_morphism_free(morphic_morphism* m);
MORPHIC_API morphic_status morphic_morphism_format(const morphic_morphism* m, char** out);
MORPHIC_API morphic_status morphic_morphism_compose(const morphic_morphism* outer, const morphic_morphism* inner,
                                        morphic_morphism** out);
/* letters: digit string of the letters to delete. */
MORPHIC_API morphic_status morphic_morphism_erase(const morphic_morphism* m, const char* letters, morphic_morphism** out);
MORPHIC_API morphic_status morphic_morphism_equal(const morphic_morphism* a, const morphic_morphism* b, int* equal);

/* Prefix of outer(inner^omega(0)), or of inner^omega(0) when outer is NULL. */
MORPHIC_API morphic_status morphic_generate(const morphic_morphism* inner, const morphic_morphism* outer, size_t length,
                                char** out);

/* ---- repetitions and patterns ---- */

/* Distinct squares / minimal overlaps, one per line, sorted. */
MORPHIC_API morphic_status morphic_squares(const char* word, char** out);
MORPHIC_API morphic_status morphic_overlaps(const char* word, char** out);

typedef struct morphic_exponent {
  int64_t num, den;
  size_t start, period, length;
} morphic_exponent;

MORPHIC_API morphic_status morphic_max_exponent(const char* word, morphic_exponent* out);

/* Distinct occurrences of a formula, one assignment per line ("A=0, B=10").
 * On MORPHIC_ERR_RESOURCE, *out holds the assignments found so far. */
MORPHIC_API morphic_status morphic_match(const char* word, const char* formula, size_t cap, uint64_t step_budget, char** out,
                             size_t* count);

/* ---- constraint sets and search ---- */

MORPHIC_API morphic_status morphic_constraints_parse(const char* text, morphic_constraints** out);
MORPHIC_API morphic_status morphic_constraints_load(const char* path, morphic_constraints** out);
MORPHIC_API void morphic_constraints_free(morphic_constraints* c);

/* MORPHIC_OK if good; MORPHIC_REFUTED with a description of the first violation otherwise. */
MORPHIC_API morphic_status morphic_check(const morphic_constraints* c, const char* word, char** violation);

typedef struct morphic_search_result {
  int exhausted;
  size_t max_length;
  char* witness;
  uint64_t tree_nodes;
} morphic_search_result;

/* On MORPHIC_ERR_RESOURCE the result holds the best word found so far. */
MORPHIC_API morphic_status morphic_search(const morphic_constraints* c, size_t budget_length, const morphic_search_options* opts,
                              morphic_search_result* out);
MORPHIC_API void morphic_search_result_clear(morphic_search_result* r);

/* S^L, one word per line in lexicographic order. witnesses may be NULL. */
MORPHIC_API morphic_status morphic_extendable(const morphic_constraints* c, size_t length, size_t horizon,
                                  const morphic_search_options* opts, char** words, char** witnesses,
                                  uint64_t* tree_nodes);

/* counts[n-1] = number of good words of length n; counts must hold n_max entries. */
MORPHIC_API morphic_status morphic_counts(const morphic_constraints* c, size_t n_max, const morphic_search_options* opts,
                              uint64_t* counts);

/* ---- theorem manifests ---- */

typedef struct morphic_verify_options {
  size_t check_length; /* 0 = manifest value */
  size_t horizon;      /* 0 = manifest value */
  size_t prefix;       /* 0 = manifest value */
  int extended;
  morphic_search_options search;
} morphic_verify_options;

MORPHIC_API void morphic_verify_options_init(morphic_verify_options* opts);

MORPHIC_API morphic_status morphic_manifest_load(const char* path, morphic_manifest** out);
MORPHIC_API void morphic_manifest_free(morphic_manifest* m);

/* MORPHIC_OK on PASS, MORPHIC_REFUTED on FAIL; the report is produced either way. */
MORPHIC_API morphic_status morphic_verify(const morphic_manifest* m, const morphic_verify_options* opts, char** report);

/* Every manifest in a directory; reports concatenated in name order. */
MORPHIC_API morphic_status morphic_verify_dir(const char* dir, const morphic_verify_options* opts, char** report,
                                  size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* MORPHIC_H */
