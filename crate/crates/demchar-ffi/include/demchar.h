/* C ABI for the demchar exact Demazure-module statistics library. */

#ifndef DEMCHAR_H
#define DEMCHAR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Status code returned by every fallible entry point.
 */
typedef enum DemcharStatus {
  DEMCHAR_STATUS_OK = 0,
  DEMCHAR_STATUS_NULL_POINTER = 1,
  DEMCHAR_STATUS_INVALID_ARGUMENT = 2,
  DEMCHAR_STATUS_ZERO_MASS = 3,
  DEMCHAR_STATUS_EMPTY_MEASURE = 4,
  DEMCHAR_STATUS_PARSE_ERROR = 5,
  DEMCHAR_STATUS_VERIFY_FAILED = 6,
} DemcharStatus;

/*
 * Opaque weight distribution handle: the measure plus the word that
 * produced it.
 */
typedef struct DemcharMeasure DemcharMeasure;

/*
 * Computes the weight distribution of a family word.
 *
 * `family` is 0 for std0, 1 for std1, 2 for ext0, 3 for ext1.
 */
DemcharStatus demchar_measure_family(uint32_t m,
                                     uint32_t n,
                                     uint32_t len,
                                     uint32_t family,
                                     DemcharMeasure **out);

/*
 * Computes the weight distribution of an arbitrary word given as
 * whitespace-separated `s0`/`s1`/`sigma` tokens, leftmost first.
 */
DemcharStatus demchar_measure_from_word(uint32_t m,
                                        uint32_t n,
                                        const char *word,
                                        DemcharMeasure **out);

/*
 * Releases a measure handle. A null handle is a no-op.
 */
void demchar_measure_free(DemcharMeasure *mu);

/*
 * Number of support points; 0 for a null handle.
 */
size_t demchar_measure_entry_count(const DemcharMeasure *mu);

/*
 * Reads the entry at `index` (lexicographic `(a, b)` order) into `a`, `b`
 * and `mult` (decimal string, caller-owned).
 */
DemcharStatus demchar_measure_entry(const DemcharMeasure *mu,
                                    size_t index,
                                    int64_t *a,
                                    int64_t *b,
                                    char **mult);

/*
 * Total mass as a decimal string.
 */
DemcharStatus demchar_measure_mass(const DemcharMeasure *mu, char **out);

/*
 * Exact expected degree of the measure as a `p/q` string.
 */
DemcharStatus demchar_measure_expected_degree(const DemcharMeasure *mu, char **out);

/*
 * Exact variance of the finite-weight deviation as a `p/q` string.
 */
DemcharStatus demchar_measure_variance_finite(const DemcharMeasure *mu, char **out);

/*
 * Maximum degree over the support.
 */
DemcharStatus demchar_measure_max_degree(const DemcharMeasure *mu, int64_t *out);

/*
 * The measure in the JSON schema
 * `{"m", "n", "word", "entries": [{"a", "b", "mult"}]}`.
 */
DemcharStatus demchar_measure_to_json(const DemcharMeasure *mu, char **out);

/*
 * Closed-form dimension of a family module as a decimal string.
 */
DemcharStatus demchar_dimension(uint32_t m,
                                uint32_t n,
                                uint32_t len,
                                uint32_t family,
                                char **out);

/*
 * Closed-form expected degree of a family module as a `p/q` string.
 */
DemcharStatus demchar_expected_degree(uint32_t m,
                                      uint32_t n,
                                      uint32_t len,
                                      uint32_t family,
                                      char **out);

/*
 * Closed-form finite-weight variance of a family module as a `p/q` string.
 */
DemcharStatus demchar_variance_finite(uint32_t m,
                                      uint32_t n,
                                      uint32_t len,
                                      uint32_t family,
                                      char **out);

/*
 * Closed-form maximal degree of a family module.
 */
DemcharStatus demchar_max_degree(uint32_t m,
                                 uint32_t n,
                                 uint32_t len,
                                 uint32_t family,
                                 int64_t *out);

/*
 * Limit of expected over maximal degree for long words, as a `p/q` string.
 */
DemcharStatus demchar_limit_ratio_len(uint32_t m, uint32_t n, char **out);

/*
 * Runs the verification suite over the grid `m<=m_max, n<=n_max, N<=len_max`
 * and stores the report text. Returns `DEMCHAR_STATUS_OK` when every check
 * passes and `DEMCHAR_STATUS_VERIFY_FAILED` otherwise; the report is
 * written in both cases.
 */
DemcharStatus demchar_verify(uint32_t m_max,
                             uint32_t n_max,
                             uint32_t len_max,
                             uint32_t threads,
                             char **report);

/*
 * Releases a string returned by this library. A null pointer is a no-op.
 */
void demchar_string_free(char *s);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* DEMCHAR_H */
