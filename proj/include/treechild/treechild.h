/*
 * treechild — exact enumeration and verification toolkit for the
 * combinatorics of tree-child networks.
 *
 * C API of the shared library. All big numbers cross the boundary as decimal
 * strings ("p" or "p/q"); strings returned through out-parameters are
 * heap-allocated and must be released with tc_string_free. Opaque handles
 * own their resources and are released with their matching *_free function.
 * Every function returns a tc_status; on failure the out-parameters are left
 * untouched and tc_last_error_message() describes the problem for the
 * calling thread.
 */
#ifndef TREECHILD_TREECHILD_H
#define TREECHILD_TREECHILD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define TREECHILD_API __declspec(dllexport)
#else
#define TREECHILD_API __attribute__((visibility("default")))
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1, /* malformed input or out-of-domain query */
  TC_ERR_BUDGET_EXCEEDED = 2,  /* a configured resource limit was hit */
  TC_ERR_INCONSISTENT = 3,     /* independent computation routes disagreed */
  TC_ERR_INTERNAL = 4
} tc_status;

TREECHILD_API const char* tc_status_name(tc_status status);

/* Thread-local message describing the most recent failure on this thread. */
TREECHILD_API const char* tc_last_error_message(void);

TREECHILD_API const char* tc_version(void);

TREECHILD_API void tc_string_free(char* s);
TREECHILD_API void tc_string_array_free(char** strings, size_t count);

/* ---- constrained word classes ------------------------------------- */

/* cls is one of 'A', 'B', 'C', 'H'. k is ignored for class A.
 * max_total_length <= 0 selects the default budget (24). h_all_letters
 * selects the stricter reading of the H restriction (all n letters seen
 * twice, not just the letters seen so far); it only affects class H. */
TREECHILD_API tc_status tc_words_count(char cls, int n, int k,
                                       int max_total_length, int h_all_letters,
                                       char** out_count);

TREECHILD_API tc_status tc_words_list(char cls, int n, int k,
                                      int max_total_length, int h_all_letters,
                                      char*** out_words, size_t* out_count);

/* out_valid receives 1 or 0. A word whose letter multiplicities cannot
 * belong to the class at all yields TC_ERR_INVALID_ARGUMENT instead. */
TREECHILD_API tc_status tc_word_is_valid(const char* word, char cls, int n,
                                         int k, int h_all_letters,
                                         int* out_valid);

/* Word <-> tableau correspondence (classes A, B, C). Tableaux travel as JSON
 * {"rows": [[bottom, null-padded], [middle], [top]]}, rows bottom to top. */
TREECHILD_API tc_status tc_word_to_tableau(const char* word, char cls, int n,
                                           int k, char** out_json);
TREECHILD_API tc_status tc_tableau_to_word(const char* tableau_json, char cls,
                                           int n, int k, char** out_word);

/* ---- exact counts -------------------------------------------------- */

/* Tableaux-with-walls count y_{k,l1,l2}. */
TREECHILD_API tc_status tc_y_count(long k, long l1, long l2, char** out_count);

/* Tree-child networks with n leaves and k reticulations; computed through
 * both word models and cross-checked (mismatch => TC_ERR_INCONSISTENT). */
TREECHILD_API tc_status tc_network_count(long n, long k, char** out_count);

/* Weighted lattice-path counts b_{n,k} and c_{n,k}. */
TREECHILD_API tc_status tc_b_count(long n, long k, char** out_count);
TREECHILD_API tc_status tc_c_count(long n, long k, char** out_count);
/* Same family in the bicolored Dyck view. */
TREECHILD_API tc_status tc_b_count_dyck(long n, long k, char** out_count);

/* ---- identity verification ----------------------------------------- */

typedef struct tc_report tc_report;

/* Tableau-level identity for all 0 <= k <= n <= max_n. */
TREECHILD_API tc_status tc_verify_tableau_identity(long max_n,
                                                   tc_report** out_report);

/* Generating-function identity for 0 <= k <= max_k; order <= 0 selects the
 * per-k default 2k+40 coefficients. */
TREECHILD_API tc_status tc_verify_series_identity(long max_k, long order,
                                                  int jobs,
                                                  tc_report** out_report);

TREECHILD_API int tc_report_passed(const tc_report* report);
TREECHILD_API size_t tc_report_line_count(const tc_report* report);
TREECHILD_API const char* tc_report_line(const tc_report* report, size_t i);
TREECHILD_API void tc_report_free(tc_report* report);

/* ---- truncated series ---------------------------------------------- */

typedef struct tc_series tc_series;

/* which: 'D', 'E', 'B' (needs k), 'C' (needs k; series in w). */
TREECHILD_API tc_status tc_series_compute(char which, long k, long order,
                                          tc_series** out_series);
TREECHILD_API long tc_series_order(const tc_series* series);
TREECHILD_API tc_status tc_series_coeff(const tc_series* series, long i,
                                        char** out_fraction);
TREECHILD_API void tc_series_free(tc_series* series);

/* ---- exact k=1 distributions ---------------------------------------- */

typedef struct tc_dist tc_dist;

/* param: 'X' (bottom-cell column), 'Y' (bottom-cell value),
 * 'Z' (top-cell value). */
TREECHILD_API tc_status tc_dist_compute(char param, long n,
                                        tc_dist** out_dist);
TREECHILD_API long tc_dist_support_min(const tc_dist* dist);
TREECHILD_API long tc_dist_support_max(const tc_dist* dist);
TREECHILD_API tc_status tc_dist_mass(const tc_dist* dist, long m,
                                     char** out_fraction);
/* Same mass rounded to double at the last step. */
TREECHILD_API tc_status tc_dist_mass_double(const tc_dist* dist, long m,
                                            double* out_value);
TREECHILD_API tc_status tc_dist_moment(const tc_dist* dist, int r,
                                       char** out_fraction);
TREECHILD_API void tc_dist_free(tc_dist* dist);

/* Moment-convergence report against the limit laws, as a JSON document
 * (rows of rescaled moments, targets, gaps, and doubling-test results).
 * n_list must be ascending positive sizes. */
TREECHILD_API tc_status tc_convergence_report(char param, const long* n_list,
                                              size_t n_count, int r_max,
                                              char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TREECHILD_TREECHILD_H */
