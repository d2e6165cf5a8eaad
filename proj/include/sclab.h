#ifndef SCLAB_H
#define SCLAB_H

/*
 * C interface to the state-complexity laboratory. All functions return a
 * status code; every other result travels through out-parameters. Returned
 * strings are heap-allocated and must be released with sclab_string_free();
 * automaton handles with sclab_automaton_free().
 *
 * On any non-OK status, sclab_last_error() returns a thread-local message
 * describing what went wrong.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sclab_automaton sclab_automaton;

typedef enum sclab_status {
  SCLAB_OK = 0,
  SCLAB_ERR_INVALID = 1,  /* bad arguments or precondition violation */
  SCLAB_ERR_PARSE = 2,    /* malformed automaton text, map, or word */
  SCLAB_ERR_IO = 3,       /* file not readable/writable */
  SCLAB_ERR_INTERNAL = 4, /* broken internal invariant; report as a bug */
} sclab_status;

const char* sclab_last_error(void);
void sclab_string_free(char* s);
void sclab_automaton_free(sclab_automaton* a);

/* --- construction and inspection --------------------------------------- */

sclab_status sclab_automaton_parse(const char* text, sclab_automaton** out);
sclab_status sclab_automaton_read(const char* path, sclab_automaton** out);
sclab_status sclab_automaton_serialize(const sclab_automaton* a, char** out);
sclab_status sclab_automaton_to_dot(const sclab_automaton* a, char** out);

int sclab_automaton_is_dfa(const sclab_automaton* a);
int sclab_automaton_state_count(const sclab_automaton* a);

/* Runs the word (letters separated by spaces, or concatenated when all
 * letters are single characters) on the automaton; NFAs are determinized
 * first. *out is 1 when accepted, 0 otherwise. */
sclab_status sclab_automaton_accepts(const sclab_automaton* a, const char* word,
                                     int* out);

/* --- core operations ------------------------------------------------------ */

/* Determinizes when needed, then minimizes; the result is the canonical
 * minimal DFA. */
sclab_status sclab_minimize(const sclab_automaton* a, sclab_automaton** out);

/* *equivalent becomes 1/0. When not equivalent and counterexample is
 * non-NULL, *counterexample receives a shortest distinguishing word (empty
 * string for lambda). NFA inputs are determinized. */
sclab_status sclab_equivalent(const sclab_automaton* a, const sclab_automaton* b,
                              int* equivalent, char** counterexample);

/* op: "cat" | "star" | "rev" | "hom" | "theta" | "cat-star" | "cat-rev".
 * Binary ops take b; unary ops require b = NULL. "hom" and "theta" need a
 * letter map such as "a=b,b=a,c=c" ("hom" bijective, "theta" involutive);
 * other ops require map = NULL. NFA inputs are determinized first. The
 * result is an NFA for "cat"/"star"/"rev"/"theta" and a DFA otherwise. */
sclab_status sclab_apply(const char* op, const sclab_automaton* a,
                         const sclab_automaton* b, const char* map,
                         sclab_automaton** out);

/* --- bounds, witnesses, verification ------------------------------------- */

/* op: "cat-star" | "cat-rev". With k1, k2 >= 0 evaluates the upper-bound
 * formula; with k1 = k2 = -1 evaluates the tight bound, where star_case is
 * "general" or "final-is-initial" (ignored for "cat-rev", may be NULL). */
sclab_status sclab_bound(const char* op, int m, int n, int k1, int k2,
                         const char* star_case, uint64_t* out);

/* family: "cat-star" (n must be 2) | "cat-rev". Returns the two witness
 * automata whose combined minimal size meets the tight bound. */
sclab_status sclab_witness(const char* family, int m, int n,
                           sclab_automaton** out_a, sclab_automaton** out_b);

/* Runs a grid sweep and renders the full TSV (header plus one row per
 * report). op: "cat-star" | "cat-rev"; source: "witness" | "random" |
 * "search"; mode: "exhaustive" | "random" (search source only).
 * *all_passed becomes 1 when every row satisfies its source's pass rule.
 * When notes is non-NULL, *notes receives one line per skipped cell (empty
 * string when nothing was skipped). */
sclab_status sclab_sweep(const char* op, int m_lo, int m_hi, int n_lo, int n_hi,
                         const char* source, uint64_t seed, int count,
                         int alphabet_size, uint64_t max_candidates,
                         const char* mode, char** tsv, int* all_passed,
                         char** notes);

/* Bounded witness search. op: "cat-star" | "cat-rev" | "cat-phi";
 * constraint: "none" | "b-final-initial" | "first-sigma-star" |
 * "second-sigma-star". *found becomes 1/0; on a hit, out_a/out_b receive the
 * pair. *report receives a human-readable coverage certificate. */
sclab_status sclab_search(const char* op, int m, int n, uint64_t target,
                          const char* constraint, int alphabet_size,
                          uint64_t max_candidates, uint64_t seed,
                          const char* mode, char** report, int* found,
                          sclab_automaton** out_a, sclab_automaton** out_b);

#ifdef __cplusplus
}
#endif

#endif /* SCLAB_H */
