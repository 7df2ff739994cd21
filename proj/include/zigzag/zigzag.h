/* C interface to the zigzag-algebra computational engine.
 *
 * All functions return a zz_status; results are written through out
 * parameters.  Strings returned through char** are heap-allocated and must
 * be released with zz_string_free; complexes with zz_complex_free.  On any
 * failure zz_last_error() describes the problem for the calling thread.
 *
 * Free-group words use the text syntax "s1 s2^-1"; grading modes are named
 * "path", "tilde", "vec".  All JSON payloads are canonical: the same inputs
 * produce byte-identical output.
 */
#ifndef ZIGZAG_H
#define ZIGZAG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zz_status {
  ZZ_OK = 0,
  ZZ_ERR_INVALID_ARGUMENT = 1, /* bad flag value, malformed word, bad mode */
  ZZ_ERR_PARSE = 2,            /* malformed JSON or complex payload */
  ZZ_ERR_DOMAIN = 3,           /* operation undefined for this input */
  ZZ_ERR_INTERNAL = 4
} zz_status;

typedef struct zz_complex zz_complex;

/* Most recent error message on this thread, or an empty string. */
const char* zz_last_error(void);

void zz_complex_free(zz_complex* c);
void zz_string_free(char* s);

/* Graded projective P_vertex<shift> in homological degree `degree` over the
 * rank-n algebra. */
zz_status zz_complex_projective(int n, const char* mode, int vertex, int shift,
                                int degree, zz_complex** out);

zz_status zz_complex_from_json(const char* json, zz_complex** out);
zz_status zz_complex_to_json(const zz_complex* c, char** out);

zz_status zz_complex_minimize(const zz_complex* c, zz_complex** out);
zz_status zz_complex_direct_sum(const zz_complex* a, const zz_complex* b,
                                zz_complex** out);

/* Minimal model of the composite twist of `word` applied to `c`. */
zz_status zz_complex_twist(const zz_complex* c, const char* word, zz_complex** out);

/* Isomorphism in the homotopy category; `iso` receives 0 or 1. */
zz_status zz_complex_is_isomorphic(const zz_complex* a, const zz_complex* b,
                                   unsigned seed, int* iso);

/* Hom dimensions over the full shift window, as JSON
 * {"hom_min":..,"hom_max":..,"int_min":..,"int_max":..,
 *  "cells":[{"hom":h,"int":m,"dim":d}, ...]}. */
zz_status zz_hom_table_json(const zz_complex* a, const zz_complex* b, char** out);

/* Metric report for the pair (alpha, beta) in the given grading mode. */
zz_status zz_metric_report_json(int n, const char* mode, const char* alpha,
                                const char* beta, int bound, char** out);

/* Hurwitz orbit of the base spherical collection under braid words of
 * length <= depth, with word and complex tracks. */
zz_status zz_hurwitz_orbit_json(int n, int depth, char** out);

/* Simple dual-monoid elements assembled from reflection factorizations with
 * component length <= bound. */
zz_status zz_simples_json(int n, int bound, char** out);

/* Run one verification suite (see zz_verify_suites).  `passed` receives 0
 * or 1; the JSON report carries check counts and failure samples.  n,
 * maxlen, threads <= 0 and seed == 0 select the suite defaults. */
zz_status zz_verify(const char* suite, int n, int maxlen, int bound, unsigned seed,
                    int threads, int* passed, char** report_json);

/* Newline-separated suite names in acceptance order. */
zz_status zz_verify_suites(char** out);

#ifdef __cplusplus
}
#endif

#endif /* ZIGZAG_H */
