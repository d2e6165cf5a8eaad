#pragma once

// Direct deterministic constructions for the combined operations
// L1 . L2* (catenation with star) and L1 . L2^R (catenation with reversal),
// together with the closed-form state-complexity bounds they realize.
//
// Both constructions build the combined DFA in one pass, performing the
// state merges that make the upper bounds tight:
//
//   cat-star: states are pairs (q, G) of a first-automaton state and a set
//   over the second automaton extended with the fresh start s2'. G carries
//   s2' exactly while q is final in the first automaton, and whenever G hits
//   a non-initial final state of the second automaton it also re-enters the
//   second automaton's initial state. Of the twin states (q, G) / (q, G+s2)
//   with q final and G missing a non-initial final, only the representative
//   without s2 is ever materialized.
//
//   cat-rev: states are pairs <i, j> of a first-automaton state and a set of
//   second-automaton states, stepped through the reversal NFA's inverse
//   transitions; entering a final i seeds j with all of the second
//   automaton's finals, and every pair whose j equals the full state set is
//   merged into a single accepting sink.

#include <cstdint>

#include "sclab/automata.hpp"

namespace sclab {

/// Parameters for the closed-form bounds: sizes m, n of the two DFAs and
/// their final-state counts k1, k2.
struct BoundQuery {
  int m = 0;
  int n = 0;
  int k1 = 0;
  int k2 = 0;
};

enum class StarCase {
  general,           // the second automaton's initial state is not final
  final_is_initial,  // every final state of the second automaton is initial
};

/// m(2^(n-1) + 2^(n-k2-1)) - k1 * 2^(n-k2-1).
/// Requires m >= 2, n >= 2, 1 <= k2 <= n-1, 0 <= k1 <= m.
std::uint64_t upper_bound_cat_star(const BoundQuery& q);

/// m * 2^n - k1 * 2^(n-k2) * (2^k2 - 1) - m + 1.
/// Requires m >= 1, n >= 1, 1 <= k1 <= m, 1 <= k2 <= n.
std::uint64_t upper_bound_cat_rev(const BoundQuery& q);

/// Worst-case value of sc(L1 . L2*) over m-state/n-state inputs:
///   m == 1 -> 1, n == 1 -> m,
///   general case -> (3m - 1) * 2^(n-2),
///   final-is-initial case -> m * 2^n - 2^(n-1).
std::uint64_t tight_bound_cat_star(int m, int n, StarCase which);

/// Worst-case value of sc(L1 . L2^R): m * 2^n - 2^(n-1) - m + 1
/// (n == 1 collapses to m, m == 1 to 2^(n-1)). Requires m, n >= 1.
std::uint64_t tight_bound_cat_rev(int m, int n);

/// Bound obtained by composing the individual catenation and star
/// complexities instead of analyzing the combined operation:
/// (2m - 1) * 2^(2^(n-1) + 2^(n-2) - 1). Requires m >= 1, n >= 2.
std::uint64_t composed_bound_cat_star(int m, int n);

/// Composed catenation-then-reversal bound: m * 2^(2^n) - 2^(2^n - 1).
/// Requires m >= 1, n >= 1.
std::uint64_t composed_bound_cat_rev(int m, int n);

/// Label of one cat-star construction state.
struct CatStarState {
  StateId q = 0;              // first-automaton state
  bool has_sentinel = false;  // s2' present, exactly when q is final
  StateSet g;                 // second-automaton states, s2 included on re-entry

  bool operator==(const CatStarState&) const = default;
};

struct CatStarConstruction {
  Dfa dfa;
  std::vector<CatStarState> states;  // label of each dfa state
};

/// Direct DFA for L(a) . L(b)*; only reachable merged states are built, so
/// the size never exceeds upper_bound_cat_star for the inputs' parameters.
/// Requires equal alphabets, a.state_count >= 2, b.state_count >= 2, and at
/// least one non-initial final in b (the degenerate shapes reduce to plain
/// catenation or to L(a) and are handled by the verification harness).
CatStarConstruction cat_star_construct(const Dfa& a, const Dfa& b);
Dfa cat_star_direct(const Dfa& a, const Dfa& b);

/// Label of one cat-rev construction state: <i, j>. The accepting sink is
/// the unique state with j = all of the second automaton's states.
struct CatRevState {
  StateId i = 0;
  StateSet j;

  bool operator==(const CatRevState&) const = default;
};

struct CatRevConstruction {
  Dfa dfa;
  std::vector<CatRevState> states;
};

/// Direct DFA for L(a) . L(b)^R. Total: any equal-alphabet pair works.
CatRevConstruction cat_rev_construct(const Dfa& a, const Dfa& b);
Dfa cat_rev_direct(const Dfa& a, const Dfa& b);

/// Minimal DFA for L(a) . L(b)*, total over every equal-alphabet pair. The
/// degenerate shapes the direct construction rejects are routed to their
/// closed forms: a 1-state first automaton yields the empty or universal
/// language; an unaccepting second automaton leaves L(a) unchanged; a second
/// automaton whose single final state is its initial one satisfies
/// L(b)* = L(b) and reduces to plain catenation.
Dfa cat_star_minimal(const Dfa& a, const Dfa& b);

/// Minimal DFA for L(a) . L(b)^R via the direct construction.
Dfa cat_rev_minimal(const Dfa& a, const Dfa& b);

}  // namespace sclab
