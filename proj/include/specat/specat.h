/*
 * C interface to the specat library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns a specat_status; on failure specat_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * heap-allocated and released with specat_string_free.
 */
#ifndef SPECAT_H
#define SPECAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SPECAT_BUILDING)
#define SPECAT_API __declspec(dllexport)
#else
#define SPECAT_API __declspec(dllimport)
#endif
#else
#define SPECAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum specat_status {
  SPECAT_OK = 0,
  SPECAT_VERIFY_FAILED = 1,
  SPECAT_INPUT_ERROR = 2,
  SPECAT_PRECONDITION = 3,
  SPECAT_TYPE_MISMATCH = 4,
  SPECAT_UNKNOWN_ELEMENT = 5,
  SPECAT_INVALID_ARGUMENT = 6,
  SPECAT_INTERNAL = 7
} specat_status;

typedef struct specat_lattice specat_lattice;
typedef struct specat_relation specat_relation;
typedef struct specat_matrix specat_matrix;
typedef struct specat_job specat_job;
typedef struct specat_report specat_report;

SPECAT_API const char* specat_version(void);
SPECAT_API const char* specat_status_name(specat_status status);
/* Message of the last failed call on this thread; "" when none. */
SPECAT_API const char* specat_last_error(void);
SPECAT_API void specat_string_free(char* s);

/* ---- finite Heyting algebras ---- */

/* spec: "builtin:bool", "builtin:b4", "builtin:chain:k" or a JSON table path. */
SPECAT_API specat_status specat_lattice_open(const char* spec, specat_lattice** out);
SPECAT_API specat_status specat_lattice_from_json(const char* json, specat_lattice** out);
SPECAT_API void specat_lattice_free(specat_lattice* lattice);
SPECAT_API size_t specat_lattice_size(const specat_lattice* lattice);
/* The label stays valid while the lattice lives. */
SPECAT_API specat_status specat_lattice_label(const specat_lattice* lattice, size_t index, const char** label);
SPECAT_API specat_status specat_lattice_index(const specat_lattice* lattice, const char* label, size_t* index);
SPECAT_API specat_status specat_lattice_meet(const specat_lattice* lattice, size_t a, size_t b, size_t* out);
SPECAT_API specat_status specat_lattice_join(const specat_lattice* lattice, size_t a, size_t b, size_t* out);
SPECAT_API specat_status specat_lattice_implies(const specat_lattice* lattice, size_t a, size_t b, size_t* out);

/* ---- L-relations ---- */

/* JSON: {"source": [..], "target": [..], "values": [[label..]..]} (rows = target). */
SPECAT_API specat_status specat_relation_from_json(const specat_lattice* lattice, const char* json,
                                                   specat_relation** out);
SPECAT_API specat_status specat_relation_to_json(const specat_relation* f, char** json);
SPECAT_API void specat_relation_free(specat_relation* f);
SPECAT_API specat_status specat_relation_shape(const specat_relation* f, size_t* target_size, size_t* source_size);
/* out = g . f */
SPECAT_API specat_status specat_relation_compose(const specat_relation* g, const specat_relation* f,
                                                 specat_relation** out);
SPECAT_API specat_status specat_relation_join(const specat_relation* a, const specat_relation* b,
                                              specat_relation** out);
SPECAT_API specat_status specat_relation_converse(const specat_relation* f, specat_relation** out);
/* 1 when equal, 0 otherwise (including NULL arguments). */
SPECAT_API int specat_relation_equal(const specat_relation* a, const specat_relation* b);

/* ---- real matrices (arrows of Mat(R)); an arrow m -> n is n x m ---- */

SPECAT_API specat_status specat_matrix_create(size_t rows, size_t cols, const double* row_major, specat_matrix** out);
SPECAT_API specat_status specat_matrix_from_csv(const char* csv, specat_matrix** out);
SPECAT_API specat_status specat_matrix_to_csv(const specat_matrix* m, char** csv);
SPECAT_API void specat_matrix_free(specat_matrix* m);
SPECAT_API size_t specat_matrix_rows(const specat_matrix* m);
SPECAT_API size_t specat_matrix_cols(const specat_matrix* m);
SPECAT_API specat_status specat_matrix_get(const specat_matrix* m, size_t row, size_t col, double* value);
/* out = g . f */
SPECAT_API specat_status specat_matrix_compose(const specat_matrix* g, const specat_matrix* f, specat_matrix** out);
SPECAT_API specat_status specat_matrix_add(const specat_matrix* a, const specat_matrix* b, specat_matrix** out);

/* ---- jobs (the CLI subcommands) ---- */

/* command: verify | separate | equitable | laws | functor */
SPECAT_API specat_status specat_job_create(const char* command, specat_job** out);
SPECAT_API void specat_job_free(specat_job* job);
SPECAT_API specat_status specat_job_add_input(specat_job* job, const char* path);
/*
 * Keys: instance, lattice, tol-abs, tol-rel, trials, seed, partition, hom,
 * max-dim, max-carrier, timing ("0"/"1").
 */
SPECAT_API specat_status specat_job_set_option(specat_job* job, const char* key, const char* value);
/* Returns SPECAT_OK whenever a report was produced; the job outcome is its exit code. */
SPECAT_API specat_status specat_job_run(const specat_job* job, specat_report** out);
SPECAT_API void specat_report_free(specat_report* report);
SPECAT_API int specat_report_exit_code(const specat_report* report);
/* format: json | text | dot */
SPECAT_API specat_status specat_report_render(const specat_report* report, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECAT_H */
