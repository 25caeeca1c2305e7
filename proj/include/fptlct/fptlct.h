#ifndef FPTLCT_FPTLCT_H
#define FPTLCT_FPTLCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPTLCT_BUILDING_LIBRARY)
#define FPTLCT_API __attribute__((visibility("default")))
#else
#define FPTLCT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fptlct_status {
  FPTLCT_OK = 0,
  FPTLCT_ERR_ARGUMENT = 1,   /* null pointer or bad flag value */
  FPTLCT_ERR_PARSE = 2,      /* message carries line and column */
  FPTLCT_ERR_DOMAIN = 3,
  FPTLCT_ERR_DEGENERATE = 4, /* every generator vanished mod p */
  FPTLCT_ERR_OVERFLOW = 5,
  FPTLCT_ERR_CAPACITY = 6,
  FPTLCT_ERR_INVARIANT = 7,
  FPTLCT_ERR_IO = 8,
  FPTLCT_ERR_INTERNAL = 9
} fptlct_status;

typedef enum fptlct_format { FPTLCT_FORMAT_JSON = 0, FPTLCT_FORMAT_CSV = 1 } fptlct_format;

/* Ideal over F_p[x_1..x_n]. */
typedef struct fptlct_ideal fptlct_ideal;
/* Monomial ideal, characteristic free. */
typedef struct fptlct_monomial_ideal fptlct_monomial_ideal;
/* Ideal with integer coefficients, for reductions mod p and sweeps. */
typedef struct fptlct_int_ideal fptlct_int_ideal;
typedef struct fptlct_report fptlct_report;

/* Message of the last failed call on this thread; "" if none. */
FPTLCT_API const char* fptlct_last_error(void);
FPTLCT_API const char* fptlct_version(void);
/* Frees every char* handed out by this library. */
FPTLCT_API void fptlct_string_free(char* s);

/* gens is a comma-separated list, e.g. "x^2 + y^3, x*y". */
FPTLCT_API fptlct_status fptlct_ideal_parse(const char* gens, uint32_t n, uint32_t p, fptlct_ideal** out);
FPTLCT_API void fptlct_ideal_free(fptlct_ideal* ideal);
FPTLCT_API fptlct_status fptlct_ideal_format(const fptlct_ideal* ideal, char** out);
/* Reduced Groebner basis, formatted like fptlct_ideal_format. */
FPTLCT_API fptlct_status fptlct_ideal_groebner(const fptlct_ideal* ideal, char** out);
/* *out = 1 iff i is contained in j. */
FPTLCT_API fptlct_status fptlct_ideal_contains(const fptlct_ideal* j, const fptlct_ideal* i, int* out);
FPTLCT_API fptlct_status fptlct_ideal_equal(const fptlct_ideal* a, const fptlct_ideal* b, int* out);
FPTLCT_API fptlct_status fptlct_ideal_is_unit(const fptlct_ideal* ideal, int* out);
/* a + (x_1, ..., x_n)^d */
FPTLCT_API fptlct_status fptlct_ideal_truncate(const fptlct_ideal* ideal, uint32_t d, fptlct_ideal** out);

FPTLCT_API fptlct_status fptlct_bracket_power(const fptlct_ideal* ideal, uint32_t e, fptlct_ideal** out);
FPTLCT_API fptlct_status fptlct_frobenius_root(const fptlct_ideal* ideal, uint32_t e, fptlct_ideal** out);
FPTLCT_API fptlct_status fptlct_nu(const fptlct_ideal* ideal, uint32_t e, uint64_t* out);
/* low and high are "n/d" strings. */
FPTLCT_API fptlct_status fptlct_fpt_enclosure(const fptlct_ideal* ideal, uint32_t e, uint64_t* nu, char** low,
                                              char** high);
/* *point is NULL when no grid point could be confirmed. */
FPTLCT_API fptlct_status fptlct_fpt_point(const fptlct_ideal* ideal, uint32_t e, uint32_t e_max,
                                          uint64_t max_denominator, char** point);
/* lambda is "n/d" or an integer. */
FPTLCT_API fptlct_status fptlct_test_ideal(const fptlct_ideal* ideal, const char* lambda, uint32_t e_max,
                                           fptlct_ideal** out, uint32_t* e_used, int* stabilized);

/* Every generator must be a single term. */
FPTLCT_API fptlct_status fptlct_monomial_ideal_parse(const char* gens, uint32_t n, fptlct_monomial_ideal** out);
FPTLCT_API void fptlct_monomial_ideal_free(fptlct_monomial_ideal* ideal);
FPTLCT_API fptlct_status fptlct_monomial_ideal_format(const fptlct_monomial_ideal* ideal, char** out);
/* "inf" for the unit ideal. */
FPTLCT_API fptlct_status fptlct_lct(const fptlct_monomial_ideal* ideal, char** out);
FPTLCT_API fptlct_status fptlct_multiplier_ideal(const fptlct_monomial_ideal* ideal, const char* lambda,
                                                 fptlct_monomial_ideal** out);
/* JSON array of "n/d" strings, ascending. */
FPTLCT_API fptlct_status fptlct_jumping_candidates(const fptlct_monomial_ideal* ideal, const char* bound,
                                                   char** out);

FPTLCT_API fptlct_status fptlct_int_ideal_parse(const char* gens, uint32_t n, fptlct_int_ideal** out);
FPTLCT_API void fptlct_int_ideal_free(fptlct_int_ideal* ideal);
FPTLCT_API fptlct_status fptlct_int_ideal_reduce(const fptlct_int_ideal* ideal, uint32_t p, fptlct_ideal** out);

typedef struct fptlct_sweep_options {
  uint64_t q_max;
  unsigned jobs;
  int timing; /* nonzero fills elapsed_ms; reports are then not byte-stable */
} fptlct_sweep_options;

/* target may be NULL. */
FPTLCT_API fptlct_status fptlct_sweep(const fptlct_int_ideal* ideal, const uint32_t* primes, size_t count,
                                      const fptlct_sweep_options* options, const char* target,
                                      fptlct_report** out);
FPTLCT_API void fptlct_report_free(fptlct_report* report);
FPTLCT_API fptlct_status fptlct_report_render(const fptlct_report* report, fptlct_format format, char** out);
FPTLCT_API fptlct_status fptlct_report_emit(const fptlct_report* report, fptlct_format format, const char* path);
/* 0 ok, 2 capacity warnings only, 3 hard invariant failed. */
FPTLCT_API fptlct_status fptlct_report_exit_code(const fptlct_report* report, int* out);
/* Flags are 1/0; below_lct_ok and trend_ok are -1 without a target. */
FPTLCT_API fptlct_status fptlct_report_flags(const fptlct_report* report, int* monotone_ok, int* below_lct_ok,
                                             int* trend_ok);
FPTLCT_API fptlct_status fptlct_report_record_count(const fptlct_report* report, size_t* out);
/* One line per warning. */
FPTLCT_API fptlct_status fptlct_report_warnings(const fptlct_report* report, char** out);

/* Primes in [lo, hi] written to buffer (capacity cap); *count gets the total. */
FPTLCT_API fptlct_status fptlct_primes_in_range(uint32_t lo, uint32_t hi, uint32_t* buffer, size_t cap,
                                                size_t* count);

/* The shipped corpus as JSON. */
FPTLCT_API fptlct_status fptlct_corpus_json(char** out);
/* Human-readable check of every corpus entry; *all_ok = 0 if a blocking check failed. */
FPTLCT_API fptlct_status fptlct_corpus_verify(char** out, int* all_ok);

/* Randomized Frobenius-root adjunction checks; *failures counts mismatches. */
FPTLCT_API fptlct_status fptlct_self_check(uint64_t seed, uint32_t count, uint32_t* failures);

#ifdef __cplusplus
}
#endif

#endif
