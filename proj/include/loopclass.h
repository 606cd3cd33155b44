/* loopclass: exact classification toolkit for loop torsors, multiloop
 * algebra invariants and related finite computations over Laurent rings.
 *
 * C surface of the shared library. Every call either succeeds (LC_OK) and
 * hands back an opaque result holding the serialized table, or fails with
 * a status code; lc_last_error() describes the most recent failure on the
 * calling thread. Results must be released with lc_result_free().
 */
#ifndef LOOPCLASS_H
#define LOOPCLASS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
  LC_OK = 0,
  /* invalid parameters or malformed input syntax */
  LC_EINVAL = 2,
  /* an internal invariant was violated; report this as a bug */
  LC_EINTERNAL = 3
} lc_status;

typedef struct lc_result lc_result;

/* Serialized output (NUL-terminated; TSV or JSON depending on `format`,
 * which accepts "tsv" or "json"; NULL means "tsv"). */
const char* lc_result_data(const lc_result* result);
size_t lc_result_size(const lc_result* result);
void lc_result_free(lc_result* result);

/* Thread-local message for the most recent failing call. */
const char* lc_last_error(void);

/* Loop forms of the simple group of the given type ("A1".."E8", "F4",
 * "G2") in nullity 2, over the Laurent ring ("r2") or the base field
 * ("k"). */
lc_status lc_classify(const char* type, int nullity, const char* over,
                      const char* format, lc_result** result);

/* The nullity-2 classification table. types_csv selects concrete ranks
 * ("A1,D4,E7"); NULL or "" emits the default representative set. */
lc_status lc_table_eala2(const char* types_csv, const char* format,
                         lc_result** result);

/* H^degree of the rank-n profinite group acting on the finite abelian
 * group with the given divisors ("2,4"). sigmas encodes one integer
 * matrix per generator, rows separated by ';', matrices by '|'
 * ("0,1;1,1|1,0;0,1"); NULL or "" means the trivial action on nvars
 * generators. */
lc_status lc_cohomology(const char* divisors_csv, int nvars,
                        const char* sigmas, int degree, const char* format,
                        lc_result** result);

/* Isometry classes of rank-dim diagonal quadratic forms in nvars Laurent
 * variables; count_only emits the count summary row instead of the class
 * list. */
lc_status lc_quadforms(int dim, int nvars, int count_only, const char* format,
                       lc_result** result);

/* Octonion-algebra classes over nvars variables; quotient != 0 lists
 * base-change orbit representatives instead. */
lc_status lc_g2(int nvars, int quotient, const char* format,
                lc_result** result);

/* Anisotropic rank-3 classes for "F4", "E7" or "E8"; quotient != 0 lists
 * base-change orbits. */
lc_status lc_exceptional3(const char* type, int quotient, const char* format,
                          lc_result** result);

/* Standard finite-subgroup generator pairs for the divisor chain
 * ("2,2") embedded in the given matrix degree. */
lc_status lc_azumaya_generators(const char* chain_csv, long long degree,
                                const char* format, lc_result** result);

/* Irreducibility of the chain's subgroup in the given degree. */
lc_status lc_azumaya_irreducible(const char* chain_csv, long long degree,
                                 const char* format, lc_result** result);

/* Degree-d classification over the real one-variable Laurent ring. */
lc_status lc_azumaya_real_table(long long degree, const char* format,
                                lc_result** result);

/* Runs the degree-2 multiloop consistency oracle on a pair such as
 * "a;b" (generating pair in the order-2 chain datum). */
lc_status lc_azumaya_oracle(const char* tuple, const char* format,
                            lc_result** result);

/* Normal form of a generating tuple in the chain datum; tuple entries are
 * integer words in a1,b1,a2,b2,... separated by ';' ("a;3b"). */
lc_status lc_normal_form_brussel(const char* chain_csv, const char* tuple,
                                 const char* format, lc_result** result);

/* Built-in oracle suite; fails with LC_EINTERNAL if any check fails. */
lc_status lc_verify(const char* format, lc_result** result);

#ifdef __cplusplus
}
#endif

#endif /* LOOPCLASS_H */
