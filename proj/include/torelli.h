/* C interface to the Torelli group computation library.
 *
 * All functions return a status code:
 *   TRL_OK           success (for verification entry points: the check passed)
 *   TRL_VERIFY_FAIL  the computation ran but a verified expectation failed
 *   TRL_INVALID      invalid input (bad genus, malformed chain, ...)
 *   TRL_INTERNAL     internal error
 *
 * Functions with a `char **out_json` parameter allocate a NUL-terminated
 * JSON document on success (and for TRL_VERIFY_FAIL, which still produces a
 * report); release it with trl_string_free. On TRL_INVALID / TRL_INTERNAL,
 * *out_json is set to NULL and trl_last_error() describes the problem for
 * the calling thread.
 */
#ifndef TORELLI_H
#define TORELLI_H

#ifdef __cplusplus
extern "C" {
#endif

#define TRL_OK 0
#define TRL_VERIFY_FAIL 1
#define TRL_INVALID 2
#define TRL_INTERNAL 3

/* Opaque surface model: genus g with 1 or 2 boundary components, with its
 * solved curve table. Models are immutable; concurrent reads are safe. */
typedef struct trl_model trl_model;

int trl_model_new(int genus, int boundaries, trl_model **out);
void trl_model_free(trl_model *m);

/* Thread-local message for the most recent TRL_INVALID / TRL_INTERNAL. */
const char *trl_last_error(void);

void trl_string_free(char *s);

/* Curve table: {genus, boundaries, rank, basis, curves:{name:[coords]}} */
int trl_table_json(const trl_model *m, char **out_json);

/* Torelli generator family with per-generator boundary data and a count
 * report. */
int trl_enumerate_json(const trl_model *m, char **out_json);

/* Conjugation of a subchain by the twist T_{c_twist}^{sign}. */
int trl_rewrite_json(const trl_model *m, const char *chain, int twist, int sign, char **out_json);

/* Johnson homomorphism of a chain map: {triples: [[a,b,c,coeff],...]} */
int trl_tau_json(const trl_model *m, const char *chain, char **out_json);

/* Birman-Craggs-Johnson homomorphism: {monomials: [["x1","y1"],...]} */
int trl_sigma_json(const trl_model *m, const char *chain, char **out_json);

/* Relation verification; relation is "J1", "J2", "J3" (with parameter k)
 * or "lantern" (k ignored). TRL_OK when both tau and sigma differences
 * vanish, TRL_VERIFY_FAIL otherwise. */
int trl_verify_json(const trl_model *m, const char *relation, int k, char **out_json);

/* Abelianization rank report for the model's genus/boundaries. */
int trl_rank_json(const trl_model *m, char **out_json);

/* Span computations: what = "tau" | "sigma" | "dmin". */
int trl_span_json(const trl_model *m, const char *what, char **out_json);

/* Homology action of the twist T_curve^sign as a row-major integer matrix:
 * {curve, sign, matrix: [[...], ...]}. Curve names follow the table. */
int trl_twist_matrix_json(const trl_model *m, const char *curve, int sign, char **out_json);

/* Disjointness graph on m-subsets of {1..g+1} with a connectivity verdict. */
int trl_graph_json(int genus, int m, char **out_json);

/* Generator support cover report at subsurface size m. */
int trl_cover_json(const trl_model *m, int size, char **out_json);

/* The full verification battery (fixed genus ranges); TRL_VERIFY_FAIL when
 * any check fails. */
int trl_all_checks_json(char **out_json);

const char *trl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TORELLI_H */
