/* zimav — Zimin-word avoidance toolkit, C interface.
 *
 * Every function that can fail returns a zav_status; details of the last
 * failure on the calling thread are available from zav_last_error().
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with zav_string_free(); handles with the matching
 * *_free(). Out-parameters are written only on ZAV_OK.
 *
 * Reports are JSON strings carrying "schema_version": 1. Exact rationals
 * are rendered "p/q" (or a plain integer when the denominator is 1),
 * never as floating point. Words over a binary alphabet render as '0'/'1',
 * larger alphabets as 'a', 'b', 'c', ...
 */

#ifndef ZIMAV_H
#define ZIMAV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zav_status {
    ZAV_OK = 0,
    ZAV_ERR_INVALID_ARGUMENT = 1, /* value outside an operation's domain */
    ZAV_ERR_PARSE = 2,            /* malformed word/pattern/image/number */
    ZAV_ERR_SIZE_LIMIT = 3,       /* a cap or enumeration budget exceeded */
    ZAV_ERR_IO = 4,               /* file system failure */
    ZAV_ERR_BAD_CHECKPOINT = 5,   /* checkpoint unreadable or inconsistent */
    ZAV_ERR_NOMEM = 6,
    ZAV_ERR_INTERNAL = 7
} zav_status;

typedef enum zav_style {
    ZAV_STYLE_BINARY = 0, /* '0'/'1'; alphabet size at most 2 */
    ZAV_STYLE_LETTERS = 1 /* 'a'..'z' then 'A'..'Z' */
} zav_style;

typedef struct zav_word zav_word;
typedef struct zav_pattern zav_pattern;
typedef struct zav_scanner zav_scanner;

const char* zav_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. Valid until the next failing call on the same thread. */
const char* zav_last_error(void);

void zav_string_free(char* s);

/* ---- words ---------------------------------------------------------- */

/* One word per line convention: "0"/"1" digits or latin letters; an empty
 * string is the empty word. */
zav_status zav_word_parse(const char* text, zav_word** out);
zav_status zav_word_from_letters(const uint8_t* letters, size_t len,
                                 int alphabet_size, zav_word** out);
void zav_word_free(zav_word* w);

size_t zav_word_length(const zav_word* w);
int zav_word_alphabet(const zav_word* w);
/* Letter indices; owned by the word, valid while the word lives. */
const uint8_t* zav_word_data(const zav_word* w);
zav_status zav_word_render(const zav_word* w, zav_style style, char** out);

zav_status zav_zimin(uint32_t n, zav_word** out);
zav_status zav_zimin_ruler(uint32_t n, zav_word** out);

/* ---- encounter deciders --------------------------------------------- */

/* First Z_n-instance subword, smallest end then shortest. found gets 0/1;
 * on 1 the half-open span is stored when the pointers are non-NULL. */
zav_status zav_encounters_zimin(const zav_word* w, uint32_t n, int* found,
                                size_t* begin, size_t* end);

/* Independent quadratic verifier (every subword, plain recursion). avoids
 * gets 0/1; on 0 the violating span (smallest end, then smallest start) is
 * stored when the pointers are non-NULL. */
zav_status zav_verify_avoids(const zav_word* w, uint32_t n, int* avoids,
                             size_t* begin, size_t* end);

/* Incremental detector: flagged reports whether some Z_n-instance ends at
 * the newly appended position. A word fed letter-by-letter flags at some
 * step exactly when zav_encounters_zimin finds a span. */
zav_status zav_scanner_new(uint32_t n, int alphabet_size, zav_scanner** out);
void zav_scanner_free(zav_scanner* sc);
zav_status zav_scanner_extend(zav_scanner* sc, uint8_t letter, int* flagged);
zav_status zav_scanner_pop(zav_scanner* sc);
size_t zav_scanner_length(const zav_scanner* sc);
/* Shortest instance ending at the current last position; meaningful only
 * right after an extend that flagged. */
zav_status zav_scanner_last_span(zav_scanner* sc, size_t* begin, size_t* end);

/* ---- patterns -------------------------------------------------------- */

zav_status zav_pattern_parse(const char* text, zav_pattern** out);
void zav_pattern_free(zav_pattern* p);
int zav_pattern_arity(const zav_pattern* p);
zav_status zav_pattern_render(const zav_pattern* p, char** out);

/* First subword that is a non-erasing morphic image of p, shortest subword
 * then leftmost. */
zav_status zav_encounters_pattern(const zav_word* w, const zav_pattern* p,
                                  int* found, size_t* begin, size_t* end);

/* Like zav_encounters_pattern but also returns the morphism: JSON with the
 * span and one image per variable, rendered in the given style. */
zav_status zav_pattern_witness(const zav_word* w, const zav_pattern* p,
                               zav_style style, int* found, char** out_json);

/* Decides unavoidability over all alphabets (Zimin-word encounter test on
 * the pattern's arity). length_cap 0 means the default (2^20); a required
 * host longer than the cap fails with ZAV_ERR_SIZE_LIMIT. */
zav_status zav_pattern_unavoidable(const zav_pattern* p, size_t length_cap,
                                   int* unavoidable);

/* ---- exhaustive search ------------------------------------------------ */

/* Exhaustive pruned DFS for the threshold f(n, q), up to length_cap
 * (0 means the default 64). jobs 0 or 1 runs single-threaded; more run a
 * deterministic tree partition whose report is identical apart from wall
 * time. JSON keys: schema_version, n, q, f_value (number or null), counts,
 * maximal_avoiders, nodes_visited, wall_time_ms. */
zav_status zav_search_f(uint32_t n, int q, size_t length_cap, int jobs,
                        char** out_json);

/* Every q-ary Z_n-avoider of length <= up_to_length in length-then-lex
 * order. JSON keys: schema_version, n, q, up_to_length, words. */
zav_status zav_enumerate_avoiders(uint32_t n, int q, size_t up_to_length,
                                  char** out_json);

/* ---- randomized witness search ---------------------------------------- */

/* Seeded randomized DFS for long avoiders; deterministic for a fixed seed.
 * target_length 0 = run until a budget ends; time_budget_seconds 0 and
 * node_budget 0 = unlimited (node budgets count cumulatively across
 * resumed runs); restart_after 0 = never restart. checkpoint_path NULL or
 * "" disables checkpointing; resume nonzero loads the checkpoint first and
 * requires a path. JSON keys: schema_version, n, q, seed, best, best_length,
 * current_length, nodes, restarts, reached_target, exhausted, wall_time_ms. */
zav_status zav_witness_search(uint32_t n, int q, size_t target_length,
                              uint64_t seed, const char* checkpoint_path,
                              int resume, double time_budget_seconds,
                              uint64_t node_budget, uint64_t restart_after,
                              char** out_json);

/* ---- exact counts and bounds ------------------------------------------ */

/* |C(n,q,M)|: number of length-M q-ary words that are Z_n-instances, by
 * exhaustive enumeration; decimal string. budget 0 means the default cap
 * 10^8 on q^M; exceeding it fails with ZAV_ERR_SIZE_LIMIT. */
zav_status zav_count_instances(uint32_t n, int q, uint32_t M,
                               unsigned long budget, int jobs, char** out);

/* Both sides of |C(n,q,M+1)| >= q |C(n,q,M)|. JSON keys: schema_version,
 * n, q, M, count_at_M, count_at_M_plus_1, holds, equality. */
zav_status zav_monotonicity(uint32_t n, int q, uint32_t M,
                            unsigned long budget, int jobs, char** out_json);

/* (q/(q-1))^(n-1) q^(M - 2^n + n + 1) as an exact rational string. */
zav_status zav_lemma2_bound(uint32_t n, int q, uint32_t M, char** out);

/* |C(n,q,M)| / q^M as an exact rational string. */
zav_status zav_instance_probability(uint32_t n, int q, uint32_t M,
                                    unsigned long budget, int jobs,
                                    char** out);

/* Power tower of Q = 2q+1, height n-1, exactly; beyond digit_cap decimal
 * digits (0 = default 10^6) the symbolic form "tower(base=Q, height=h)" is
 * returned instead. */
zav_status zav_tower_upper_bound(uint32_t n, int q, size_t digit_cap,
                                 char** out);

/* T_1 = 1, T_{k+1} = (T_k + 1)(q^{T_k} + 1) - 1, valuated at k = n; same
 * digit-cap fallback as the tower. */
zav_status zav_recurrence_upper_bound(uint32_t n, int q, size_t digit_cap,
                                      char** out);

/* binom(M+1,2) (q/(q-1))^(n-1) q^(-2^n + n + 1) as an exact rational
 * string; M is a decimal string so astronomically long words are exact. */
zav_status zav_moment_expectation(uint32_t n, int q, const char* M_decimal,
                                  char** out);

/* Largest M with M(M+1) < 2 (q-1)^(n-1) q^(2^n - 2n), decimal string. */
zav_status zav_first_moment_max_length(uint32_t n, int q, size_t digit_cap,
                                       char** out);

/* Composite report for one (n, q): the two upper bounds, the first-moment
 * length, and (when max_M >= 0) an exact count sweep for M = 0..max_M with
 * per-M verdicts. Pass max_M = -1 to skip the sweep. JSON keys:
 * schema_version, n, q, tower, recurrence, first_moment_max_length,
 * sweep [{M, count, lemma2_bound, count_le_bound, monotone_from_prev}]. */
zav_status zav_bounds_report(uint32_t n, int q, long max_M,
                             unsigned long budget, int jobs, char** out_json);

/* ---- bitmap rendering -------------------------------------------------- */

/* ASCII PBM (P1) image of a binary word, row-major, 1 = black, final row
 * padded with white and the count recorded in a "# pad=N" comment.
 * row_width 0 means the default 90. Byte-stable. */
zav_status zav_pbm_encode(const zav_word* w, size_t row_width, char** out);

/* Exact inverse of zav_pbm_encode. */
zav_status zav_pbm_decode(const char* text, zav_word** out);

#ifdef __cplusplus
}
#endif

#endif /* ZIMAV_H */
