#ifndef SKEWRANK_H
#define SKEWRANK_H

/* C interface to the skew shape rank library.
 *
 * Conventions:
 *   - Every function returns an sr_status; results travel through out
 *     parameters, which are written only on SR_OK.
 *   - char** outputs receive a malloc'd NUL-terminated string; release it
 *     with sr_string_free.  int** outputs are released with sr_ints_free.
 *   - Handles (sr_shape*, sr_poly*) are released with their _free function.
 *   - sr_last_error() returns a thread-local message for the most recent
 *     failing call; the pointer is owned by the library.
 *   - Structured results (matrices, reports) are returned as JSON text.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_NULL_ARGUMENT = 1,
  SR_PARSE_ERROR = 2,
  SR_NOT_DECREASING = 3,
  SR_NOT_CONTAINED = 4,
  SR_NOT_MONOTONE = 5,
  SR_COLLISION_AB = 6,
  SR_COLLISION_SHIFTED = 7,
  SR_ANTI_DIAGONAL_VIOLATION = 8,
  SR_INSUFFICIENT_Y_SEQUENCE = 9,
  SR_REPEATED_X = 10,
  SR_NOT_SQUARE = 11,
  SR_NOT_IRREDUCIBLE = 12,
  SR_HAS_ZERO_ENTRIES = 13,
  SR_SEARCH_BOUND_EXCEEDED = 14,
  SR_RECONSTRUCTION_INVALID = 15,
  SR_UNKNOWN_SUITE = 16,
  SR_THEOREM_VIOLATION = 17,
  SR_INTERNAL_ERROR = 18
} sr_status;

typedef struct sr_shape sr_shape;
typedef struct sr_poly sr_poly;

const char* sr_version(void);
const char* sr_status_name(sr_status status); /* static storage */
const char* sr_last_error(void);              /* thread-local, do not free */

void sr_string_free(char* s);
void sr_ints_free(int* v);

/* ---- shapes ---------------------------------------------------------- */

/* Text form "6,5,5,3/2,1,1"; no slash for a straight shape; "0" if empty. */
sr_status sr_shape_parse(const char* text, sr_shape** out);
void sr_shape_free(sr_shape* s);
sr_status sr_shape_format(const sr_shape* s, char** out);
sr_status sr_shape_cell_count(const sr_shape* s, int* out);
sr_status sr_shape_row_count(const sr_shape* s, int* out);
sr_status sr_shape_connected(const sr_shape* s, int* out);
/* Rows and columns deleted while normalizing to basic form. */
sr_status sr_shape_normalization(const sr_shape* s, int* rows_removed, int* cols_removed);

/* ---- ranks ------------------------------------------------------------ */

sr_status sr_rank_diagonal(const sr_shape* s, int* out);
sr_status sr_rank_code(const sr_shape* s, int* out);
sr_status sr_rank_h_expansion(const sr_shape* s, int* out);
sr_status sr_rank_strips(const sr_shape* s, int cell_bound, int* out);
sr_status sr_zrank(const sr_shape* s, int* out);
/* All of the above plus the agreement verdict, as JSON. */
sr_status sr_rank_report_json(const sr_shape* s, char** json);

/* Boundary words of the inner (top) and outer (bottom) partition, written
 * as strings of 0s and 1s. */
sr_status sr_reduced_code(const sr_shape* s, char** top, char** bottom);

/* Complete homogeneous expansion matrix: subscripts, entry classes, row
 * rank, as JSON. */
sr_status sr_jt_json(const sr_shape* s, char** json);

/* ---- counting polynomial ---------------------------------------------- */

/* Polynomial in t counting column-strict fillings with entries up to t. */
sr_status sr_schur_spec(const sr_shape* s, sr_poly** out);
void sr_poly_free(sr_poly* p);
sr_status sr_poly_degree(const sr_poly* p, int* out);
sr_status sr_poly_low_index(const sr_poly* p, int* out);
sr_status sr_poly_coeff(const sr_poly* p, int i, char** out); /* exact rational */
sr_status sr_poly_eval(const sr_poly* p, const char* t, char** out);
sr_status sr_poly_str(const sr_poly* p, char** out);

/* ---- structured determinants ------------------------------------------ */

/* kind: "cauchy", "factorial" or "binomial".  a and b are comma separated;
 * rationals "p/q" are accepted except where the kind requires integers.
 * JSON fields: kind, a, b, det, omega, sign, verdict. */
sr_status sr_det_json(const char* kind, const char* a, const char* b, char** json);

/* ---- decomposition determinants ---------------------------------------- */

/* cut: direction word over {R,U}, one letter per diagonal junction; NULL
 * or "" selects the all-R word (row decomposition). */
sr_status sr_grank(const sr_shape* s, const char* cut, int* out);
sr_status sr_hg_json(const sr_shape* s, const char* cut, char** json);
sr_status sr_pq_json(const sr_shape* s, const char* cut, char** json);

/* ---- double Schur ------------------------------------------------------ */

/* lambda, x, y comma separated; y may be empty.  JSON fields: lambda, x, y,
 * alternant, tableau, equal. */
sr_status sr_double_schur_json(const char* lambda, const char* x, const char* y,
                               char** json);

/* ---- verification campaigns -------------------------------------------- */

/* options_json keys (all optional): max_cells, n, lo, hi, samples, seed,
 * jobs.  Writes the campaign report as JSON and the failure count. */
sr_status sr_verify_run(const char* suite, const char* options_json, char** report_json,
                        long* failed);

#ifdef __cplusplus
}
#endif

#endif /* SKEWRANK_H */
