#ifndef NUMEROLAB_H
#define NUMEROLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status of a finished operation. EMPTY means the search or filter ran
 * fine but produced no items. EINVAL covers malformed or out-of-range
 * inputs, ERUNTIME exhausted searches and internal failures. */
typedef enum nl_status {
  NL_OK = 0,
  NL_EMPTY = 1,
  NL_EINVAL = 2,
  NL_ERUNTIME = 3
} nl_status;

/* plain: bare values, one item per line.
 * json: one JSON record per line, each carrying a schema version and the
 *       echoed input parameters.
 * bfile: "index value" pairs, 1-based; only for plain integer series. */
typedef enum nl_format {
  NL_PLAIN = 0,
  NL_JSON = 1,
  NL_BFILE = 2
} nl_format;

/* Opaque result handle. Every operation returns one (NULL only on
 * allocation failure); release with nl_result_free. */
typedef struct nl_result nl_result;

nl_status nl_result_status(const nl_result* r);
/* Rendered data lines; empty string when there is nothing to print. */
const char* nl_result_output(const nl_result* r);
/* Diagnostic message; empty string when status is NL_OK. */
const char* nl_result_error(const nl_result* r);
void nl_result_free(nl_result* r);

const char* nl_version(void);
/* Worker-count hint; results never depend on it. */
void nl_set_threads(unsigned threads);

/* Integers are decimal strings; rationals accept "p" or "p/q". Digit and
 * index lists are comma-separated decimal strings. Streams are named:
 * naturals, odds, evens, primes, fibonacci, lucas, triangular, lucky,
 * smarandache, squares, cubes. */

/* kernel */
nl_result* nl_kernel_prime(const char* n, int rounds, nl_format fmt);
nl_result* nl_kernel_factor(const char* n, nl_format fmt);
nl_result* nl_kernel_smarandache(const char* n, nl_format fmt);
nl_result* nl_kernel_quotient(const char* m, nl_format fmt);
nl_result* nl_kernel_power(const char* n, nl_format fmt);
nl_result* nl_kernel_lucky(const char* limit, nl_format fmt);
nl_result* nl_kernel_stream(const char* stream, uint64_t offset,
                            uint64_t count, nl_format fmt);

/* concat */
nl_result* nl_concat_terms(const char* stream, uint64_t offset,
                           uint64_t count, nl_format fmt);
nl_result* nl_concat_screen(const char* stream, uint64_t offset,
                            uint64_t count, const char* test, int rounds,
                            nl_format fmt);
nl_result* nl_concat_closure(const char* stream, uint64_t offset,
                             uint64_t count, nl_format fmt);

/* uniform; digits like "1" or "0,5" */
nl_result* nl_uniform_smallest(const char* n, unsigned base,
                               const char* digits, int complete,
                               nl_format fmt);
nl_result* nl_uniform_members(const char* n, unsigned base,
                              const char* digits, int complete,
                              uint64_t count, uint64_t max_len,
                              nl_format fmt);
nl_result* nl_uniform_empty(const char* n, unsigned base, const char* digits,
                            int complete, nl_format fmt);

/* opseq; operators named add, sub, mul, div, pow, root */
nl_result* nl_opseq_eval(const char* operands, const char* ops,
                         uint64_t digit_cap, nl_format fmt);
nl_result* nl_opseq_next(uint64_t upto, const char* opset,
                         const char* threshold, const char* domain,
                         uint64_t digit_cap, nl_format fmt);
nl_result* nl_opseq_seq(const char* opset, uint64_t count, const char* domain,
                        const char* start, nl_format fmt);
nl_result* nl_opseq_random(const char* opset, uint64_t count, uint64_t seed,
                           nl_format fmt);

/* relations; folds named add, sub, mul */
nl_result* nl_relations_scan(const char* stream, uint64_t offset,
                             uint64_t n_max, uint64_t p, uint64_t q,
                             const char* fold, nl_format fmt);
nl_result* nl_relations_ppa(uint64_t count, nl_format fmt);
nl_result* nl_relations_ppa_verify(uint64_t p_max, nl_format fmt);

/* digital; predicates square, cube, prime; relations double, lucky */
nl_result* nl_digital_filter(const char* stream, uint64_t offset, uint64_t k,
                             const char* allowed, nl_format fmt);
nl_result* nl_digital_partial(const char* n, const char* predicate,
                              nl_format fmt);
nl_result* nl_digital_split(const char* n, const char* relation,
                            nl_format fmt);
nl_result* nl_digital_triad(const char* n, nl_format fmt);

/* magic; laws named sum, alternating; grids and cubes are JSON arrays
 * of rows (cubes: arrays of layers). */
nl_result* nl_magic_verify(const char* grid, const char* law, int diagonals,
                           int distinct, nl_format fmt);
nl_result* nl_magic_search(const char* pool, uint64_t order, const char* law,
                           int diagonals, int distinct, uint64_t limit,
                           nl_format fmt);
nl_result* nl_magic_cube(const char* cells, const char* law, nl_format fmt);

/* conjecture */
nl_result* nl_conjecture_reps(const char* k, const char* bound,
                              nl_format fmt);
nl_result* nl_conjecture_sweep(const char* k_max, const char* bound,
                               nl_format fmt);
nl_result* nl_conjecture_witness(const char* a, const char* x_max,
                                 nl_format fmt);
nl_result* nl_conjecture_bad(const char* a_max, const char* x_max,
                             nl_format fmt);

/* divis; functions named factorial, double, fibonacci, smarandache,
 * identity */
nl_result* nl_divis_check(const char* fn, const char* n_max, unsigned depth,
                          nl_format fmt);
nl_result* nl_divis_on(const char* fn, const char* indices, unsigned depth,
                       nl_format fmt);
nl_result* nl_divis_strong(const char* fn, const char* n_max, nl_format fmt);
nl_result* nl_divis_kstrong(const char* fn, unsigned arity,
                            const char* n_max, nl_format fmt);

/* geom; shapes are JSON: {"vertices": [[x,y], ...]} for polygons,
 * {"vertices": [[x,y,z], ...], "faces": [[i,j,k,...], ...]} for solids.
 * Points are comma-separated coordinates. */
nl_result* nl_geom_ratio(const char* shape, const char* point, int clamped,
                         nl_format fmt);
nl_result* nl_geom_inf(const char* shape, unsigned grid, unsigned refine,
                       int clamped, nl_format fmt);
nl_result* nl_geom_make(const char* kind, uint64_t sides, const char* size,
                        nl_format fmt);

/* remainder */
nl_result* nl_remainder_forward(const char* start, uint64_t q,
                                const char* extra, uint64_t steps,
                                nl_format fmt);
nl_result* nl_remainder_backward(const char* last, uint64_t q,
                                 const char* extra, uint64_t steps,
                                 nl_format fmt);
nl_result* nl_remainder_minimal(uint64_t q, uint64_t extra, uint64_t steps,
                                int allow_zero, uint64_t cap, nl_format fmt);

#ifdef __cplusplus
}
#endif

#endif /* NUMEROLAB_H */
