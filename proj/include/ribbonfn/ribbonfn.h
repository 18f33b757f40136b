#ifndef RIBBONFN_H
#define RIBBONFN_H

/* C interface to the ribbonfn library. Objects are opaque handles released
 * with the matching *_free function. Strings returned through char** are
 * owned by the caller and released with rbf_string_free. On a non-OK status
 * rbf_last_error() describes the failure for the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RBF_OK = 0,
  RBF_IDENTITY_FAILURE = 1,
  RBF_PARSE_ERROR = 2,
  RBF_INVALID_INPUT = 3,
  RBF_INTERNAL = 4
} rbf_status;

typedef enum { RBF_FORMAT_TEXT = 0, RBF_FORMAT_JSON = 1, RBF_FORMAT_LATEX = 2, RBF_FORMAT_CSV = 3 } rbf_format;

typedef struct rbf_symfunc rbf_symfunc;
typedef struct rbf_op rbf_op;

const char* rbf_version(void);
const char* rbf_last_error(void);
/* Byte offset of the last parse error, or -1. */
long rbf_last_error_offset(void);
void rbf_string_free(char* s);
int rbf_max_degree(void);

/* Text literal such as "s[2,1] + (q+q^2)*s[3]", or the JSON form when the
 * text starts with '{'. */
rbf_status rbf_symfunc_parse(const char* text, rbf_symfunc** out);
void rbf_symfunc_free(rbf_symfunc* f);
/* TEXT, JSON or LATEX. */
rbf_status rbf_symfunc_format(const rbf_symfunc* f, rbf_format fmt, char** out);
/* Highest degree present; -1 for the zero function. */
int rbf_symfunc_degree(const rbf_symfunc* f);

rbf_status rbf_op_parse(const char* text, rbf_op** out);
void rbf_op_free(rbf_op* op);
int rbf_op_degree_shift(const rbf_op* op);
/* Canonical expression text. */
rbf_status rbf_op_format(const rbf_op* op, char** out);
rbf_status rbf_op_apply(const rbf_op* op, const rbf_symfunc* f, rbf_symfunc** out);

/* shape is comma separated, e.g. "2,2,2". */
rbf_status rbf_hl_build(const char* shape, int via_columns, rbf_symfunc** out);
/* CSV or JSON table of K_{lambda,mu}(q) over all mu of the same size. */
rbf_status rbf_kostka_table(const char* lambda, rbf_format fmt, char** out);

/* Runs a named suite. Negative bounds select the suite defaults; jobs 0
 * means hardware concurrency. report receives the JSON report. Returns
 * RBF_IDENTITY_FAILURE when any case fails. */
rbf_status rbf_verify(const char* suite, int max_m, int max_k, int max_size, int jobs, char** report);
/* Newline separated "name<TAB>description" lines. */
rbf_status rbf_suite_list(char** out);

#ifdef __cplusplus
}
#endif

#endif
