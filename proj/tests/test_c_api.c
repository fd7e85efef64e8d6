/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hline/hline.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_graphs(void) {
  hline_graph* g = NULL;
  char* s = NULL;
  EXPECT(hline_graph_parse("4; 0-1, 1-2, 2-3", &g) == HLINE_OK);
  EXPECT(hline_graph_order(g) == 4);
  EXPECT(hline_graph_size(g) == 3);
  EXPECT(hline_graph_edge_list(g, &s) == HLINE_OK);
  EXPECT(strcmp(s, "4; 0-1, 1-2, 2-3") == 0);
  hline_string_free(s);
  EXPECT(hline_graph_graph6(g, &s) == HLINE_OK);
  EXPECT(strcmp(s, "Ch") == 0);
  hline_string_free(s);

  hline_graph* k4 = NULL;
  EXPECT(hline_graph_parse("C~", &k4) == HLINE_OK);
  EXPECT(hline_graph_size(k4) == 6);

  const uint32_t pairs[] = {3, 2, 2, 1, 1, 0};
  hline_graph* p4 = NULL;
  int iso = -1;
  EXPECT(hline_graph_from_edges(4, pairs, 3, &p4) == HLINE_OK);
  EXPECT(hline_graph_is_isomorphic(g, p4, &iso) == HLINE_OK && iso == 1);
  EXPECT(hline_graph_is_isomorphic(g, k4, &iso) == HLINE_OK && iso == 0);

  char *a = NULL, *b = NULL;
  EXPECT(hline_graph_canonical_code(g, &a) == HLINE_OK);
  EXPECT(hline_graph_canonical_code(p4, &b) == HLINE_OK);
  EXPECT(strcmp(a, b) == 0);
  hline_string_free(a);
  hline_string_free(b);

  hline_graph_free(g);
  hline_graph_free(k4);
  hline_graph_free(p4);
  hline_graph_free(NULL);
}

static void test_errors(void) {
  hline_graph* g = NULL;
  size_t line = 0, column = 0;
  EXPECT(hline_graph_parse("3; 0-0", &g) == HLINE_PARSE);
  EXPECT(g == NULL);
  EXPECT(contains(hline_last_error(), "self-loop"));
  hline_last_error_position(&line, &column);
  EXPECT(line == 1 && column > 0);

  EXPECT(hline_graph_family("C2", &g) == HLINE_INVALID_ARGUMENT);
  EXPECT(hline_graph_parse(NULL, &g) == HLINE_INVALID_ARGUMENT);

  EXPECT(hline_graph_family("C5", &g) == HLINE_OK);
  EXPECT(strcmp(hline_last_error(), "") == 0);
  char* out = NULL;
  EXPECT(hline_hl_json(g, 3, 1, &out) == HLINE_INVALID_ARGUMENT);
  EXPECT(out == NULL);
  EXPECT(hline_conjecture_json("nope", 4, 4, NULL, NULL, NULL, &out) == HLINE_INVALID_ARGUMENT);
  hline_graph_free(g);
}

static void test_reports(void) {
  hline_graph* g = NULL;
  hline_budget budget;
  hline_outcome outcome = HLINE_UNKNOWN;
  int hit = -1;
  char* out = NULL;
  hline_budget_default(&budget);
  EXPECT(budget.max_iter == 30 && budget.max_order == 512);

  EXPECT(hline_graph_family("G(r=1,m=3)", &g) == HLINE_OK);
  EXPECT(hline_classify_json(g, 4, &budget, NULL, &outcome, &hit, &out) == HLINE_OK);
  EXPECT(outcome == HLINE_CONVERGED && hit == 0);
  EXPECT(contains(out, "\"outcome\": \"Converged\""));
  hline_string_free(out);

  EXPECT(hline_hl_json(g, 4, 2, &out) == HLINE_OK);
  EXPECT(contains(out, "\"provenance\""));
  hline_string_free(out);

  EXPECT(hline_property_suite_json(g, 4, NULL, &out) == HLINE_OK);
  EXPECT(contains(out, "\"checks\""));
  hline_string_free(out);
  hline_graph_free(g);

  budget.max_iter = 1;
  EXPECT(hline_graph_family("G(r=3,m=3)", &g) == HLINE_OK);
  EXPECT(hline_classify_json(g, 6, &budget, NULL, &outcome, NULL, &out) == HLINE_OK);
  EXPECT(outcome == HLINE_UNKNOWN);
  EXPECT(contains(out, "\"unknown_reason\""));
  hline_string_free(out);
  hline_graph_free(g);

  EXPECT(hline_search_min_json(4, 5, 0, 0, NULL, NULL, &out) == HLINE_OK);
  EXPECT(contains(out, "\"records\""));
  hline_string_free(out);

  size_t unknown = 99;
  EXPECT(hline_conjecture_json("UnicyclicMin", 4, 5, NULL, NULL, &unknown, &out) == HLINE_OK);
  EXPECT(unknown == 0);
  EXPECT(contains(out, "no-counterexample-within-bounds"));
  hline_string_free(out);
}

static void test_certificates(void) {
  hline_graph* g = NULL;
  char *report = NULL, *reason = NULL;
  hline_outcome outcome;
  int ok = -1;
  EXPECT(hline_graph_family("F7", &g) == HLINE_OK);
  EXPECT(hline_classify_json(g, 6, NULL, NULL, &outcome, NULL, &report) == HLINE_OK);
  EXPECT(outcome == HLINE_DIVERGED_BY_ORDER);
  const char* cert = strstr(report, "\"certificate\": ");
  EXPECT(cert != NULL);
  if (cert) {
    cert += strlen("\"certificate\": ");
    /* the certificate object ends where the trace member starts */
    const char* end = strstr(cert, ",\n  \"trace\"");
    EXPECT(end != NULL);
    if (end) {
      size_t len = (size_t)(end - cert);
      char* obj = malloc(len + 1);
      memcpy(obj, cert, len);
      obj[len] = '\0';
      EXPECT(hline_verify_certificate_json(obj, &ok, &reason) == HLINE_OK);
      EXPECT(ok == 1);
      hline_string_free(reason);
      reason = NULL;
      char* n = strstr(obj, "\"n\": 6");
      EXPECT(n != NULL);
      if (n) n[5] = '9';
      EXPECT(hline_verify_certificate_json(obj, &ok, &reason) == HLINE_OK);
      EXPECT(ok == 0 && strlen(reason) > 0);
      hline_string_free(reason);
      reason = NULL;
      free(obj);
    }
  }
  EXPECT(hline_verify_certificate_json("{not json", &ok, NULL) == HLINE_PARSE);
  hline_string_free(report);
  hline_graph_free(g);
}

int main(void) {
  EXPECT(strlen(hline_version()) > 0);
  test_graphs();
  test_errors();
  test_reports();
  test_certificates();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  puts("c api: all checks passed");
  return 0;
}
