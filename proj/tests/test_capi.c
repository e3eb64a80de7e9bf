#include <stdio.h>
#include <string.h>

#include "cutgroup/cutgroup.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void builtin_groups(void) {
  cg_group* g = NULL;
  EXPECT(cg_group_builtin("c9", &g) == CG_OK);
  EXPECT(cg_group_order(g) == 9);
  EXPECT(cg_group_degree(g) == 9);
  EXPECT(strcmp(cg_group_name(g), "c9") == 0);
  int cut = -1;
  uint64_t k = 0;
  EXPECT(cg_group_is_cut(g, &cut, &k) == CG_OK);
  EXPECT(cut == 0);
  EXPECT(k == 2);
  int rational = -1;
  EXPECT(cg_group_is_rational(g, &rational) == CG_OK);
  EXPECT(rational == 0);
  cg_group_free(g);

  g = NULL;
  EXPECT(cg_group_builtin("no-such-group", &g) == CG_UNKNOWN_BUILTIN);
  EXPECT(g == NULL);
  EXPECT(strstr(cg_last_error(), "no-such-group") != NULL);
}

static void generators(void) {
  const char* gens[] = {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"};
  cg_group* g = NULL;
  EXPECT(cg_group_from_generators(7, gens, 2, "f21", &g) == CG_OK);
  EXPECT(cg_group_order(g) == 21);
  int cut = 0;
  uint64_t k = 99;
  EXPECT(cg_group_is_cut(g, &cut, &k) == CG_OK);
  EXPECT(cut == 1);
  EXPECT(k == 0);

  char* table = NULL;
  EXPECT(cg_group_chartable(g, CG_FORMAT_JSON, &table) == CG_OK);
  EXPECT(table && strstr(table, "\"characters\"") != NULL);
  cg_string_free(table);

  char* analysis = NULL;
  EXPECT(cg_group_analyze(g, CG_FORMAT_TEXT, &analysis) == CG_OK);
  EXPECT(analysis && strstr(analysis, "is_cut: true") != NULL);
  cg_string_free(analysis);
  cg_group_free(g);

  const char* bad[] = {"(0 1 7)"};
  g = NULL;
  EXPECT(cg_group_from_generators(7, bad, 1, "bad", &g) != CG_OK);
  EXPECT(g == NULL);
  EXPECT(cg_last_error()[0] != '\0');

  EXPECT(cg_group_from_json("{\"degree\": 3, \"generators\": [[1, 2, 0]]}", &g) == CG_OK);
  EXPECT(cg_group_order(g) == 3);
  cg_group_free(g);
  g = NULL;
  EXPECT(cg_group_from_json("{not json", &g) == CG_PARSE_ERROR);
  EXPECT(cg_group_load("/nonexistent/group.json", &g) == CG_IO_ERROR);
}

static void verification(void) {
  cg_verify_options opt;
  cg_verify_options_init(&opt);
  EXPECT(opt.suites == CG_SUITE_ALL);
  EXPECT(opt.table_cap == 2000);
  EXPECT(opt.enforce_hypotheses == 1);

  unsigned suite = 0;
  EXPECT(cg_suite_from_name("theorem", &suite) == CG_OK);
  EXPECT(suite == CG_SUITE_THEOREM);
  EXPECT(cg_suite_from_name("nope", &suite) == CG_INVALID_ARGUMENT);

  opt.suites = CG_SUITE_THEOREM;
  opt.max_order = 100;
  char* report = NULL;
  int passed = 0;
  EXPECT(cg_verify_corpus(&opt, CG_FORMAT_JSON, &report, &passed) == CG_OK);
  EXPECT(passed == 1);
  EXPECT(report && strstr(report, "\"failed\": 0") != NULL);
  cg_string_free(report);

  cg_group* g = NULL;
  EXPECT(cg_group_builtin("c3", &g) == CG_OK);
  report = NULL;
  EXPECT(cg_verify_group(g, &opt, CG_FORMAT_TEXT, &report, &passed) == CG_OK);
  EXPECT(passed == 1);
  EXPECT(report && strstr(report, "pass     theorem.sylow3-cut") != NULL);
  cg_string_free(report);
  cg_group_free(g);

  char* list = NULL;
  EXPECT(cg_corpus_list(CG_FORMAT_TEXT, &list) == CG_OK);
  EXPECT(list && strstr(list, "double_frobenius_15309") != NULL);
  cg_string_free(list);

  EXPECT(cg_group_analyze(NULL, CG_FORMAT_JSON, &list) == CG_INVALID_ARGUMENT);
}

int main(void) {
  builtin_groups();
  generators();
  verification();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}
