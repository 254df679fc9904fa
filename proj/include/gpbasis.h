/* gpbasis: exact combinatorics of charge, catabolism, and the Garsia-Procesi
 * ring, behind a C interface.
 *
 * All functions return a gpb_status; results are UTF-8 JSON strings written
 * to *out, owned by the caller and released with gpb_string_free.  A failing
 * call leaves *out untouched and stores a message retrievable with
 * gpb_last_error until the next call on the same session.  Sessions are not
 * thread-safe; use one per thread (the underlying computations share
 * immutable caches and may run concurrently).
 *
 * Sequence arguments are int32 arrays.  Permutations are one-line notation
 * over 1..n; partitions are weakly decreasing positive parts; words are
 * nonnegative letters.  JSON shapes are documented in docs/formats.md.
 */

#ifndef GPBASIS_H
#define GPBASIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpb_status {
    GPB_OK = 0,
    GPB_ERROR_INVALID_ARGUMENT = 1, /* a documented precondition failed   */
    GPB_ERROR_CHECK_FAILED = 2,     /* a verification ran and did not pass */
    GPB_ERROR_INTERNAL = 3          /* invariant breakage; please report   */
} gpb_status;

typedef struct gpb_session gpb_session;

gpb_session* gpb_session_new(void);
void gpb_session_free(gpb_session* s);
const char* gpb_last_error(const gpb_session* s);
const char* gpb_version(void);
void gpb_string_free(char* s);

/* --- permutation statistics and RSK ------------------------------------ */

/* {"P": rows, "Q": rows, "shape": [...]} (rows bottom-to-top). */
gpb_status gpb_rsk(gpb_session* s, const int32_t* perm, size_t n, char** out);

/* {"word": [...], "cocharge": k} resp. {"word": [...], "charge": k}. */
gpb_status gpb_cocharge(gpb_session* s, const int32_t* perm, size_t n, char** out);
gpb_status gpb_charge(gpb_session* s, const int32_t* perm, size_t n, char** out);

/* {"exponents": [...], "monomial": "x1^2*x2", "degree": k}. */
gpb_status gpb_charge_monomial(gpb_session* s, const int32_t* perm, size_t n,
                               char** out);

/* --- catabolism --------------------------------------------------------- */

/* {"ctype": [...]} for the insertion tableau of the permutation. */
gpb_status gpb_ctype(gpb_session* s, const int32_t* perm, size_t n, char** out);

/* Catabolism insertion on a cocharge word:
 * {"ctype": [...], "recording": rows, "passes": [...]}. */
gpb_status gpb_blasiak(gpb_session* s, const int32_t* word, size_t n, char** out);

/* Chains run on a cocharge word.  decomposition_json is an array of 1-based
 * index blocks partitioning 1..n, e.g. "[[1,2,3,4,6,7],[5,8,9,10]]"; the seed
 * is built from the block subwords.  Returns the full trace. */
gpb_status gpb_chains(gpb_session* s, const int32_t* word, size_t n,
                      const char* decomposition_json, char** out);

/* --- bases of the Garsia-Procesi ring R_{mu^t} -------------------------- */

/* kind: "charge" | "shuffle" | "descent" | "artin".  The descent and artin
 * kinds ignore mu beyond its size. */
gpb_status gpb_basis(gpb_session* s, const int32_t* mu, size_t mu_len,
                     const char* kind, char** out);

/* {"mu": [...], "coefficients": [c0, c1, ...]} for the charge basis. */
gpb_status gpb_hilbert(gpb_session* s, const int32_t* mu, size_t mu_len, char** out);

/* Modified Hall-Littlewood polynomial of mu expanded in basis "s"|"h"|"m". */
gpb_status gpb_hl(gpb_session* s, const int32_t* mu, size_t mu_len,
                  const char* basis, char** out);

/* Index set of the antisymmetric basis: words, charges, P and Q. */
gpb_status gpb_antisym(gpb_session* s, const int32_t* mu, size_t mu_len,
                       const int32_t* gamma, size_t gamma_len, char** out);

/* --- certification ------------------------------------------------------ */

/* Groebner certification inside the quotient indexed by mu: the charge
 * basis indexed by mu^t is a monomial basis of R_mu (gamma == NULL), and its
 * antisymmetrization under the Young subgroup of gamma spans the
 * gamma-antisymmetric part (gamma != NULL).  order: "grevlex" | "lex".
 * The Groebner stage is bounded: |mu| <= 5 by default, |mu| == 6 only with
 * allow_n6 set, larger sizes are refused.  Returns GPB_ERROR_CHECK_FAILED
 * when the certification does not pass; the report is written either way. */
gpb_status gpb_verify(gpb_session* s, const int32_t* mu, size_t mu_len,
                      const int32_t* gamma, size_t gamma_len, const char* order,
                      int32_t allow_n6, char** out);

/* Named theorem suite at bound n (n <= 0 for the default).  Suites:
 * thm-a, golden, cardinality, hilbert, certify, ctype-sum, swaps,
 * cocharge-class, prop-b, frobenius, hl-two-route, ctype-oracles, all. */
gpb_status gpb_check_theorems(gpb_session* s, const char* suite, int32_t n,
                              char** out);

#ifdef __cplusplus
}
#endif

#endif /* GPBASIS_H */
