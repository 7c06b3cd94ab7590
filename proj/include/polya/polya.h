#ifndef POLYA_POLYA_H
#define POLYA_POLYA_H

#include <stddef.h>
#include <stdint.h>

#if defined(POLYA_BUILDING_LIBRARY)
#define POLYA_API __attribute__((visibility("default")))
#else
#define POLYA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polya_status {
    POLYA_OK = 0,
    POLYA_INVALID_ARGUMENT = 1,
    POLYA_LIMIT_EXCEEDED = 2,
    POLYA_NUMERIC = 3,
    POLYA_CHECK_FAILED = 4,
    POLYA_INTERNAL = 5
} polya_status;

/* Exact coefficient table (univariate or polynomial-valued). */
typedef struct polya_series polya_series;
/* Any computed report, held as JSON and CSV text plus a pass flag. */
typedef struct polya_result polya_result;

POLYA_API const char* polya_version(void);
/* Message of the last failed call on this thread; "" if none. */
POLYA_API const char* polya_last_error(void);
POLYA_API const char* polya_status_name(polya_status status);

/* Largest truncation order accepted by polya_coeffs for univariate and
 * polynomial-valued families. */
POLYA_API size_t polya_max_order(int bivariate);
/* Default order from POLYA_ORDER / POLYA_BIVARIATE_ORDER, else 400 / 120. */
POLYA_API size_t polya_default_order(int bivariate);

/* family: polya, cayley, dforest, ctree-poly, pointed, dforest-components,
 * hierarchy, binary, omega, identity, identity-dforest, identity-pointed,
 * e-series. omega is required for "omega" and ignored otherwise. */
POLYA_API polya_status polya_coeffs(const char* family, size_t order, const char* omega,
                                    polya_series** out);
POLYA_API int polya_family_is_bivariate(const char* family);
POLYA_API size_t polya_series_order(const polya_series* s);
POLYA_API int polya_series_is_bivariate(const polya_series* s);
/* Coefficient of z^n (times marker^k for polynomial families) as "p/q".
 * Caller frees with polya_string_free. */
POLYA_API polya_status polya_series_coeff(const polya_series* s, size_t n, size_t k, char** out);
POLYA_API polya_status polya_series_json(const polya_series* s, char** out);
POLYA_API polya_status polya_series_csv(const polya_series* s, char** out);
POLYA_API void polya_series_free(polya_series* s);

/* family: polya, dforest, decomposition, hierarchy, binary. A report that
 * misses the tolerance is still returned, with passed = 0. */
POLYA_API polya_status polya_singularity(const char* family, double tol, polya_result** out);
/* which: forest-size or forest-size-conditional. */
POLYA_API polya_status polya_table(const char* which, size_t m_max, size_t n_exact, double tol,
                                   polya_result** out);
POLYA_API polya_status polya_dn_check(size_t n_lo, size_t n_hi, double tol, polya_result** out);
/* threads = 0 uses every core; the result does not depend on it. */
POLYA_API polya_status polya_sample(size_t n, size_t samples, uint64_t seed, size_t threads,
                                    polya_result** out);
POLYA_API polya_status polya_lmax(const size_t* n_values, size_t count, size_t samples, double s,
                                  uint64_t seed, size_t threads, polya_result** out);
/* forest_max = 0 picks min(oracle_max + 2, 12). passed = all checks passed. */
POLYA_API polya_status polya_verify(size_t oracle_max, size_t forest_max, size_t series_order,
                                    polya_result** out);

POLYA_API const char* polya_result_json(const polya_result* r);
POLYA_API const char* polya_result_csv(const polya_result* r);
POLYA_API int polya_result_passed(const polya_result* r);
POLYA_API void polya_result_free(polya_result* r);

POLYA_API void polya_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
