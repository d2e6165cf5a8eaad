#pragma once

// Witness families matching the lower-bound constructions, and a bounded
// search for small witnesses under structural constraints.
//
// The generated families realize the tight bounds exactly:
//   cat-star (n = 2, ternary alphabet): minimize(cat_star_direct(A, B)) has
//   exactly (3m - 1) * 2^(n-2) = 3m - 1 states;
//   cat-rev (ternary alphabet): minimize(cat_rev_direct(M, N)) has exactly
//   m * 2^n - 2^(n-1) - m + 1 states.
//
// The search enumerates candidate DFA pairs over small alphabets either
// exhaustively (transition tables in lexicographic order, final sets ordered
// by size then value, initial state fixed at 0) or by seeded random
// sampling, deduplicates by canonical form of the reachable part, and
// re-verifies any hit through the naive oracle pipeline before returning it.

#include <cstdint>
#include <optional>
#include <string>

#include "sclab/automata.hpp"

namespace sclab {

struct WitnessPair {
  Dfa a;
  Dfa b;
  std::string family;  // "cat-star", "cat-rev", or "search:<op>"
  int m = 0;
  int n = 0;
  std::uint64_t predicted = 0;  // state count the pair is built to reach
};

/// Lower-bound family for L1 . L2*: m >= 2 states for the first automaton,
/// the second fixed at n = 2, both over {a, b, c}. predicted = 3m - 1.
WitnessPair gen_cat_star_witness(int m);

/// Lower-bound family for L1 . L2^R: m >= 2, n >= 2, over {a, b, c}.
/// predicted = m * 2^n - 2^(n-1) - m + 1.
WitnessPair gen_cat_rev_witness(int m, int n);

enum class SearchOp {
  cat_star,  // L1 . L2*
  cat_rev,   // L1 . L2^R
  cat_phi,   // L1 . phi(L2) for the fixed pairwise-swap involution phi
};

enum class SearchConstraint {
  none,
  b_finals_initial_only,  // second automaton: finals = {initial}
  first_sigma_star,       // first automaton fixed to the universal language
  second_sigma_star,      // second automaton fixed to the universal language
};

enum class SearchMode { exhaustive, random };

struct SearchBudget {
  int alphabet_size = 1;               // 1..4 letters
  std::uint64_t max_candidates = 1'000'000;  // pair budget / space ceiling
  std::uint64_t seed = 1;              // random mode only
  SearchMode mode = SearchMode::exhaustive;
};

/// What the search actually covered; enough to certify a negative result.
struct SearchCertificate {
  SearchOp op = SearchOp::cat_star;
  int m = 0;
  int n = 0;
  int alphabet_size = 1;
  SearchConstraint constraint = SearchConstraint::none;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t target = 0;
  std::uint64_t space_size = 0;     // raw candidate pairs in the space
  std::uint64_t scanned = 0;        // pairs evaluated (after deduplication)
  std::uint64_t distinct_a = 0;     // canonically distinct first automata
  std::uint64_t distinct_b = 0;
  bool exhausted = false;           // the whole space was covered
  bool found = false;

  std::string describe() const;
};

struct SearchResult {
  std::optional<WitnessPair> witness;  // first pair reaching the target
  std::uint64_t best_size = 0;         // largest minimal size seen
  std::optional<std::pair<Dfa, Dfa>> best_pair;
  SearchCertificate certificate;
};

std::string to_string(SearchOp op);
std::string to_string(SearchConstraint c);

/// Looks for an m-state/n-state pair whose combined-operation state
/// complexity reaches `target`. Exhaustive mode requires the raw candidate
/// space to fit within budget.max_candidates and otherwise throws
/// std::invalid_argument; random mode draws exactly max_candidates samples
/// (stopping early on a hit).
SearchResult search_witness(SearchOp op, int m, int n, std::uint64_t target,
                            SearchConstraint constraint,
                            const SearchBudget& budget);

}  // namespace sclab
