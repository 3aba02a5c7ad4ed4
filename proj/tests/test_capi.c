/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "specat/specat.h"

static int failures = 0;

#define CHECK(cond)                                                      \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ++failures;                                                        \
      fprintf(stderr, "%s:%d: CHECK(%s) failed\n", __FILE__, __LINE__, #cond); \
    }                                                                    \
  } while (0)

static void test_lattice(void) {
  specat_lattice* l = NULL;
  size_t a = 0, b = 0, out = 0;
  const char* label = NULL;
  CHECK(specat_lattice_open("builtin:b4", &l) == SPECAT_OK);
  CHECK(specat_lattice_size(l) == 4);
  CHECK(specat_lattice_index(l, "a", &a) == SPECAT_OK);
  CHECK(specat_lattice_index(l, "b", &b) == SPECAT_OK);
  CHECK(specat_lattice_meet(l, a, b, &out) == SPECAT_OK);
  CHECK(specat_lattice_label(l, out, &label) == SPECAT_OK && strcmp(label, "0") == 0);
  CHECK(specat_lattice_join(l, a, b, &out) == SPECAT_OK);
  CHECK(specat_lattice_label(l, out, &label) == SPECAT_OK && strcmp(label, "1") == 0);
  CHECK(specat_lattice_implies(l, a, b, &out) == SPECAT_OK && out == b);
  CHECK(specat_lattice_index(l, "z", &out) == SPECAT_UNKNOWN_ELEMENT);
  CHECK(strstr(specat_last_error(), "'z'") != NULL);
  CHECK(specat_lattice_meet(l, 9, 0, &out) == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_lattice_label(l, 0, NULL) == SPECAT_INVALID_ARGUMENT);
  specat_lattice_free(l);

  CHECK(specat_lattice_open("builtin:nope", &l) == SPECAT_INPUT_ERROR);
  CHECK(specat_lattice_open(NULL, &l) == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_lattice_from_json("{\"elements\":[\"0\",\"1\"],\"meet\":[[\"0\",\"1\"],[\"0\",\"1\"]],"
                                 "\"join\":[[\"0\",\"1\"],[\"1\",\"1\"]]}",
                                 &l) == SPECAT_INPUT_ERROR);
}

static void test_relations(void) {
  specat_lattice* l = NULL;
  specat_relation *f = NULL, *g = NULL, *gf = NULL, *c = NULL, *j = NULL;
  size_t rows = 0, cols = 0;
  char* json = NULL;
  CHECK(specat_lattice_open("builtin:b4", &l) == SPECAT_OK);
  CHECK(specat_relation_from_json(l, "{\"source\":[\"p\",\"q\"],\"target\":[\"r\"],\"values\":[[\"a\",\"b\"]]}",
                                  &f) == SPECAT_OK);
  CHECK(specat_relation_shape(f, &rows, &cols) == SPECAT_OK && rows == 1 && cols == 2);
  CHECK(specat_relation_converse(f, &c) == SPECAT_OK);
  CHECK(specat_relation_compose(f, c, &gf) == SPECAT_OK);
  CHECK(specat_relation_to_json(gf, &json) == SPECAT_OK);
  /* a \/ b = 1 on the single cell. */
  CHECK(json != NULL && strstr(json, "\"1\"") != NULL);
  specat_string_free(json);
  CHECK(specat_relation_compose(f, f, &g) == SPECAT_TYPE_MISMATCH);
  CHECK(specat_relation_join(f, f, &j) == SPECAT_OK);
  CHECK(specat_relation_equal(f, j) == 1);
  CHECK(specat_relation_equal(f, NULL) == 0);
  CHECK(specat_relation_from_json(l, "{\"source\":[\"p\"],\"target\":[\"r\"],\"values\":[[\"z\"]]}", &g) ==
        SPECAT_UNKNOWN_ELEMENT);
  CHECK(specat_relation_from_json(l, "not json", &g) == SPECAT_INPUT_ERROR);
  specat_relation_free(f);
  specat_relation_free(c);
  specat_relation_free(gf);
  specat_relation_free(j);
  specat_lattice_free(l);
}

static void test_matrices(void) {
  const double fv[] = {1, 2, 3, 4, 5, 6};
  specat_matrix *f = NULL, *g = NULL, *gf = NULL, *s = NULL, *bad = NULL;
  double v = 0;
  char* csv = NULL;
  CHECK(specat_matrix_create(2, 3, fv, &f) == SPECAT_OK);
  CHECK(specat_matrix_rows(f) == 2 && specat_matrix_cols(f) == 3);
  CHECK(specat_matrix_from_csv("1,1\n", &g) == SPECAT_OK);
  CHECK(specat_matrix_compose(g, f, &gf) == SPECAT_OK);
  CHECK(specat_matrix_get(gf, 0, 2, &v) == SPECAT_OK && v == 9.0);
  CHECK(specat_matrix_get(gf, 1, 0, &v) == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_matrix_compose(f, g, &s) == SPECAT_TYPE_MISMATCH);
  CHECK(specat_matrix_add(f, f, &s) == SPECAT_OK);
  CHECK(specat_matrix_get(s, 1, 1, &v) == SPECAT_OK && v == 10.0);
  CHECK(specat_matrix_to_csv(gf, &csv) == SPECAT_OK && strcmp(csv, "5,7,9\n") == 0);
  specat_string_free(csv);
  CHECK(specat_matrix_from_csv("1,x\n", &bad) == SPECAT_INPUT_ERROR);
  CHECK(strstr(specat_last_error(), "csv line 1, field 2") != NULL);
  specat_matrix_free(f);
  specat_matrix_free(g);
  specat_matrix_free(gf);
  specat_matrix_free(s);
}

static int run_job(const char* command, const char* input, const char* key, const char* value, char** text) {
  specat_job* job = NULL;
  specat_report* report = NULL;
  char path[1024];
  int code = -1;
  if (specat_job_create(command, &job) != SPECAT_OK) return -1;
  if (input) {
    snprintf(path, sizeof path, "%s/%s", SPECAT_FIXTURE_DIR, input);
    CHECK(specat_job_add_input(job, path) == SPECAT_OK);
  }
  if (key) CHECK(specat_job_set_option(job, key, value) == SPECAT_OK);
  if (specat_job_run(job, &report) == SPECAT_OK) {
    code = specat_report_exit_code(report);
    if (text) CHECK(specat_report_render(report, "text", text) == SPECAT_OK);
  }
  specat_report_free(report);
  specat_job_free(job);
  return code;
}

static void test_jobs(void) {
  char* text = NULL;
  specat_job* job = NULL;
  CHECK(run_job("verify", "b4_sum.json", NULL, NULL, NULL) == 0);
  CHECK(run_job("verify", "real3.json", "tol-abs", "1e-12", NULL) == 0);
  CHECK(run_job("verify", "real3_bad_lambda.json", NULL, NULL, &text) == 1);
  CHECK(text != NULL && strstr(text, "(d) sum kappa_i.lambda_i.rho_i = f") != NULL);
  specat_string_free(text);
  CHECK(run_job("verify", "b4_unknown_element.json", NULL, NULL, NULL) == 5);
  CHECK(run_job("equitable", "disconnected.edges", NULL, NULL, NULL) == 3);
  CHECK(run_job("laws", NULL, "trials", "5", NULL) == 0);

  CHECK(specat_job_create("bogus", &job) == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_job_create("laws", &job) == SPECAT_OK);
  CHECK(specat_job_set_option(job, "colour", "red") == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_job_set_option(job, "trials", "many") == SPECAT_INVALID_ARGUMENT);
  CHECK(specat_job_set_option(job, "tol-abs", "-1") == SPECAT_INVALID_ARGUMENT);
  specat_job_free(job);
}

static void test_misc(void) {
  CHECK(strlen(specat_version()) > 0);
  CHECK(strcmp(specat_status_name(SPECAT_PRECONDITION), "precondition") == 0);
  specat_string_free(NULL);
  specat_lattice_free(NULL);
  specat_relation_free(NULL);
  specat_matrix_free(NULL);
  specat_job_free(NULL);
  specat_report_free(NULL);
}

int main(void) {
  test_lattice();
  test_relations();
  test_matrices();
  test_jobs();
  test_misc();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
