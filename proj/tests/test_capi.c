/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "morphic/morphic.h"

static int failures = 0;

#define EXPECT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

static void morphisms(void) {
  morphic_morphism *b3 = NULL, *sq = NULL, *k5 = NULL, *c5 = NULL, *left = NULL, *k4 = NULL, *k3 = NULL, *erased = NULL;
  char* text = NULL;
  int eq = 0;
  EXPECT(morphic_morphism_parse("012/02/1", &b3) == MORPHIC_OK);
  EXPECT(morphic_morphism_compose(b3, b3, &sq) == MORPHIC_OK);
  EXPECT(morphic_morphism_format(sq, &text) == MORPHIC_OK);
  EXPECT(strcmp(text, "012021/0121/02") == 0);
  morphic_string_free(text);

  EXPECT(morphic_morphism_parse("k5", &k5) == MORPHIC_OK);
  EXPECT(morphic_morphism_parse("c5", &c5) == MORPHIC_OK);
  EXPECT(morphic_morphism_compose(c5, k5, &left) == MORPHIC_OK);
  EXPECT(morphic_morphism_equal(left, sq, &eq) == MORPHIC_OK && eq == 1);

  EXPECT(morphic_morphism_parse("k4", &k4) == MORPHIC_OK);
  EXPECT(morphic_morphism_parse("k3", &k3) == MORPHIC_OK);
  EXPECT(morphic_morphism_erase(k4, "3", &erased) == MORPHIC_OK);
  EXPECT(morphic_morphism_equal(erased, k3, &eq) == MORPHIC_OK && eq == 1);

  EXPECT(morphic_generate(b3, NULL, 6, &text) == MORPHIC_OK);
  EXPECT(strcmp(text, "012021") == 0);
  morphic_string_free(text);
  EXPECT(morphic_generate(b3, k5, 10, &text) == MORPHIC_OK);
  EXPECT(strncmp(text, "013431", 6) == 0);
  morphic_string_free(text);

  EXPECT(morphic_morphism_parse("01x", &erased) == MORPHIC_ERR_SYNTAX);
  EXPECT(strlen(morphic_last_error()) > 0);
  morphic_morphism_free(erased);
  EXPECT(morphic_morphism_compose(k4, b3, &erased) == MORPHIC_OK);
  morphic_morphism_free(erased);
  /* k4 images use the letter 3, which b3 does not map */
  EXPECT(morphic_morphism_compose(b3, k4, &erased) == MORPHIC_ERR_DOMAIN);
  EXPECT(strcmp(morphic_status_name(MORPHIC_ERR_RESOURCE), "resource budget exceeded") == 0);

  morphic_morphism_free(b3);
  morphic_morphism_free(sq);
  morphic_morphism_free(k5);
  morphic_morphism_free(c5);
  morphic_morphism_free(left);
  morphic_morphism_free(k4);
  morphic_morphism_free(k3);
}

static void repetitions(void) {
  char* out = NULL;
  size_t count = 0;
  morphic_exponent e;
  EXPECT(morphic_squares("0100010101", &out) == MORPHIC_OK);
  EXPECT(strcmp(out, "00\n0101\n1010\n") == 0);
  morphic_string_free(out);
  EXPECT(morphic_overlaps("0100010101", &out) == MORPHIC_OK);
  EXPECT(strcmp(out, "000\n01010\n10101\n") == 0);
  morphic_string_free(out);
  EXPECT(morphic_max_exponent("01010", &e) == MORPHIC_OK);
  EXPECT(e.num == 5 && e.den == 2 && e.period == 2);
  EXPECT(morphic_max_exponent("0", &e) == MORPHIC_ERR_DOMAIN);
  EXPECT(morphic_match("001001", "AA", 3, 0, &out, &count) == MORPHIC_OK);
  EXPECT(count == 2);
  EXPECT(strcmp(out, "A=0\nA=001\n") == 0);
  morphic_string_free(out);
  EXPECT(morphic_match("0101", "A..B", 3, 0, &out, &count) == MORPHIC_ERR_SYNTAX);
  EXPECT(morphic_squares("01a", &out) == MORPHIC_ERR_SYNTAX);
}

static void search(void) {
  morphic_constraints* c = NULL;
  morphic_search_options o;
  morphic_search_result r;
  char *v = NULL, *words = NULL, *wit = NULL;
  uint64_t counts[4], nodes = 0;
  morphic_search_options_init(&o);
  EXPECT(o.workers >= 1 && o.node_budget > 0);

  EXPECT(morphic_constraints_parse("alphabet 2\nforbid-formula AA\n", &c) == MORPHIC_OK);
  EXPECT(morphic_check(c, "010", &v) == MORPHIC_OK);
  morphic_string_free(v);
  v = NULL;
  EXPECT(morphic_check(c, "0100", &v) == MORPHIC_REFUTED);
  EXPECT(v != NULL && strstr(v, "formula") != NULL);
  morphic_string_free(v);

  memset(&r, 0, sizeof r);
  EXPECT(morphic_search(c, 100, &o, &r) == MORPHIC_OK);
  EXPECT(r.exhausted == 1 && r.max_length == 3 && strcmp(r.witness, "010") == 0);
  morphic_search_result_clear(&r);

  EXPECT(morphic_counts(c, 4, &o, counts) == MORPHIC_OK);
  EXPECT(counts[0] == 2 && counts[1] == 2 && counts[2] == 2 && counts[3] == 0);
  morphic_constraints_free(c);

  EXPECT(morphic_constraints_parse("alphabet 2\nforbid-factor 11\n", &c) == MORPHIC_OK);
  EXPECT(morphic_extendable(c, 2, 2, &o, &words, &wit, &nodes) == MORPHIC_OK);
  EXPECT(strcmp(words, "00\n01\n10\n") == 0);
  morphic_string_free(words);
  morphic_string_free(wit);
  morphic_constraints_free(c);

  EXPECT(morphic_constraints_parse("alphabet 3\nforbid-formula AA\n", &c) == MORPHIC_OK);
  o.node_budget = 50;
  memset(&r, 0, sizeof r);
  EXPECT(morphic_search(c, 1000, &o, &r) == MORPHIC_ERR_RESOURCE);
  EXPECT(r.exhausted == 0 && r.max_length > 0 && r.witness != NULL);
  morphic_search_result_clear(&r);
  morphic_constraints_free(c);

  EXPECT(morphic_constraints_parse("bogus\n", &c) == MORPHIC_ERR_SYNTAX);
  EXPECT(morphic_constraints_load("/nonexistent.cons", &c) == MORPHIC_ERR_IO);
}

static void manifests(const char* dir) {
  char path[4096];
  morphic_manifest* m = NULL;
  morphic_verify_options o;
  char* report = NULL;
  morphic_verify_options_init(&o);
  snprintf(path, sizeof path, "%s/b3", dir);
  EXPECT(morphic_manifest_load(path, &m) == MORPHIC_OK);
  o.check_length = 10;
  o.horizon = 10;
  EXPECT(morphic_verify(m, &o, &report) == MORPHIC_OK);
  EXPECT(report != NULL && strstr(report, "VERDICT b3 PASS") != NULL);
  morphic_string_free(report);
  morphic_manifest_free(m);
  EXPECT(morphic_manifest_load("/nonexistent", &m) == MORPHIC_ERR_IO);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: test_capi MANIFEST_DIR\n");
    return 2;
  }
  EXPECT(strcmp(morphic_version(), "0.1.0") == 0);
  morphisms();
  repetitions();
  search();
  manifests(argv[1]);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
