#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sclab/automata.hpp"
#include "sclab/combined.hpp"
#include "sclab/rational.hpp"
#include "sclab/rng.hpp"
#include "sclab/verify.hpp"
#include "sclab/witness.hpp"

using namespace sclab;

namespace {

// A fixed 3-state DFA over {a} whose two final states have identical rows:
// 0 -a-> 1, 1 -a-> 2, 2 -a-> 1, finals {1, 2}. States 1 and 2 are
// equivalent, so the minimal DFA has 2 states (language: a+).
Dfa three_state_mergeable() {
  return make_dfa(Alphabet::first(1), 3, 0, {1, 2}, {{1}, {2}, {1}});
}

Dfa permuted(const Dfa& d, const std::vector<StateId>& perm) {
  std::vector<std::vector<StateId>> delta(d.state_count);
  StateSet finals;
  for (StateId q = 0; q < d.state_count; ++q) {
    delta[perm[q]].resize(d.alphabet.size());
    for (int c = 0; c < d.alphabet.size(); ++c)
      delta[perm[q]][c] = perm[d.delta[q][c]];
    if (d.is_final(q)) finals = set_insert(std::move(finals), perm[q]);
  }
  return make_dfa(d.alphabet, d.state_count, perm[d.initial],
                  std::move(finals), std::move(delta));
}

}  // namespace

TEST_CASE("sorted-set helpers") {
  StateSet s = normalized({3, 1, 3, 0});
  CHECK(s == StateSet{0, 1, 3});
  CHECK(set_contains(s, 3));
  CHECK_FALSE(set_contains(s, 2));
  CHECK(set_union({0, 2}, {1, 2}) == StateSet{0, 1, 2});
  CHECK(set_insert({0, 2}, 1) == StateSet{0, 1, 2});
  CHECK(set_insert({0, 2}, 2) == StateSet{0, 2});
  CHECK(set_erase({0, 1, 2}, 1) == StateSet{0, 2});
  CHECK(sets_intersect({0, 5}, {5, 9}));
  CHECK_FALSE(sets_intersect({0, 5}, {1, 9}));
  CHECK(set_includes({0, 1, 2}, {0, 2}));
  CHECK_FALSE(set_includes({0, 2}, {0, 1}));
}

TEST_CASE("alphabet construction and validation") {
  CHECK(Alphabet::abc().letters == std::vector<std::string>{"a", "b", "c"});
  CHECK(Alphabet::first(1).size() == 1);
  CHECK(Alphabet::first(4).letters[3] == "d");
  CHECK(Alphabet::abc().index_of("b") == 1);
  CHECK_FALSE(Alphabet::abc().index_of("z").has_value());
  CHECK_THROWS_AS(validate(Alphabet{{}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Alphabet{{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("make_dfa rejects broken invariants") {
  Alphabet sigma = Alphabet::first(2);
  // Well-formed baseline.
  CHECK_NOTHROW(make_dfa(sigma, 2, 0, {1}, {{0, 1}, {1, 1}}));
  // Initial state out of range.
  CHECK_THROWS_AS(make_dfa(sigma, 2, 2, {1}, {{0, 1}, {1, 1}}),
                  std::invalid_argument);
  // Final state out of range.
  CHECK_THROWS_AS(make_dfa(sigma, 2, 0, {5}, {{0, 1}, {1, 1}}),
                  std::invalid_argument);
  // Missing a row: delta not total.
  CHECK_THROWS_AS(make_dfa(sigma, 2, 0, {1}, {{0, 1}}),
                  std::invalid_argument);
  // Row with too few symbols.
  CHECK_THROWS_AS(make_dfa(sigma, 2, 0, {1}, {{0, 1}, {1}}),
                  std::invalid_argument);
  // Transition target out of range.
  CHECK_THROWS_AS(make_dfa(sigma, 2, 0, {1}, {{0, 3}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_dfa(sigma, 0, 0, {}, {}), std::invalid_argument);
}

TEST_CASE("make_nfa validation and empty initial sets") {
  Alphabet sigma = Alphabet::first(1);
  CHECK_NOTHROW(make_nfa(sigma, 2, {0}, {1}, {{{0, 1}}, {{}}}));
  CHECK_THROWS_AS(make_nfa(sigma, 2, {2}, {1}, {{{0}}, {{}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_nfa(sigma, 2, {0}, {1}, {{{0, 2}}, {{}}}),
                  std::invalid_argument);
  // No initial states is legal: such an automaton accepts nothing. The
  // reversal of a DFA without final states produces exactly this shape.
  Nfa none = make_nfa(sigma, 1, {}, {0}, {{{0}}});
  Dfa det = determinize(none).dfa;
  CHECK(is_equivalent(det, empty_language_dfa(sigma)));
}

TEST_CASE("determinize keeps deterministic inputs intact") {
  Dfa d = gen_cat_rev_witness(3, 3).a;
  DeterminizeResult r = determinize(as_nfa(d));
  CHECK(r.dfa.state_count == trim_reachable(d).state_count);
  CHECK(is_equivalent(r.dfa, d));
}

TEST_CASE("determinize builds the a+ subsets") {
  // 0 -a-> {0,1}, 1 -a-> {}, accepting {1}: the language a+.
  Nfa n = make_nfa(Alphabet::first(1), 2, {0}, {1}, {{{0, 1}}, {{}}});
  DeterminizeResult r = determinize(n);
  CHECK(r.dfa.state_count == 2);
  REQUIRE(r.labels.subsets.size() == 2);
  CHECK(r.labels.subsets[0] == StateSet{0});
  CHECK(r.labels.subsets[1] == StateSet{0, 1});
  // Acceptance: every non-empty word of a's, not the empty word.
  CHECK_FALSE(accepts(r.dfa, {}));
  CHECK(accepts(r.dfa, {0}));
  CHECK(accepts(r.dfa, {0, 0, 0, 0}));
  // Cross-check the full language signature against the NFA simulation.
  auto brute = oracle::signature(
      [&](const Word& w) { return oracle::nfa_accepts(n, w); }, 1, 8);
  auto det = oracle::signature(
      [&](const Word& w) { return oracle::dfa_accepts(r.dfa, w); }, 1, 8);
  CHECK(brute == det);
}

TEST_CASE("determinize stays within the powerset of the reversal NFA") {
  Dfa n2 = gen_cat_rev_witness(2, 2).b;
  DeterminizeResult r = determinize(reverse_nfa(n2));
  CHECK(r.dfa.state_count <= 4);  // 2^n subsets at n = 2
  // Subset labels are pairwise distinct and start at the NFA initial set.
  CHECK(r.labels.subsets[0] == n2.finals);
  for (std::size_t i = 0; i < r.labels.subsets.size(); ++i)
    for (std::size_t j = i + 1; j < r.labels.subsets.size(); ++j)
      CHECK(r.labels.subsets[i] != r.labels.subsets[j]);
}

TEST_CASE("determinize output is complete and language-preserving") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 25; ++round) {
    int states = 2 + static_cast<int>(rng.below(4));
    int k = 1 + static_cast<int>(rng.below(3));
    Dfa d = random_dfa(states, Alphabet::first(k), 0.4, rng.next());
    Nfa rev = reverse_nfa(d);  // genuinely nondeterministic in general
    DeterminizeResult r = determinize(rev);
    for (const auto& row : r.dfa.delta) {
      REQUIRE(static_cast<int>(row.size()) == k);
      for (StateId t : row) CHECK((0 <= t && t < r.dfa.state_count));
    }
    auto brute = oracle::signature(
        [&](const Word& w) { return oracle::nfa_accepts(rev, w); }, k, 6);
    auto det = oracle::signature(
        [&](const Word& w) { return oracle::dfa_accepts(r.dfa, w); }, k, 6);
    CHECK(brute == det);
  }
}

TEST_CASE("minimize leaves single-state automata alone") {
  Dfa u = sigma_star_dfa(Alphabet::abc());
  CHECK(minimize(u) == u);
  Dfa e = empty_language_dfa(Alphabet::first(2));
  CHECK(minimize(e) == e);
}

TEST_CASE("minimize merges equivalent final states") {
  Dfa d = three_state_mergeable();
  Dfa m = minimize(d);
  CHECK(m.state_count == 2);
  CHECK(is_equivalent(m, d));
  CHECK(oracle::moore_minimal_size(d) == 2);
}

TEST_CASE("minimize of the cat-rev construction hits the formula value") {
  WitnessPair w = gen_cat_rev_witness(2, 2);
  Dfa direct = cat_rev_direct(w.a, w.b);
  CHECK(minimize(direct).state_count == 5);  // 2*4 - 2 - 2 + 1
}

TEST_CASE("minimize properties on a random corpus") {
  SplitMix64 rng(77);
  for (int round = 0; round < 40; ++round) {
    int states = 1 + static_cast<int>(rng.below(8));
    int k = 1 + static_cast<int>(rng.below(3));
    Dfa d = random_dfa(states, Alphabet::first(k), 0.35, rng.next());
    Dfa m = minimize(d);
    CHECK(m.state_count <= d.state_count);
    CHECK(is_equivalent(m, d));
    // Agrees with an independent Moore-refinement count.
    CHECK(m.state_count == oracle::moore_minimal_size(d));
    // Idempotent, and stable as a record (already canonical).
    CHECK(minimize(m) == m);
    // All states reachable, all pairs distinguishable.
    CHECK(trim_reachable(m).state_count == m.state_count);
    CHECK(oracle::all_pairs_distinguishable(m));
  }
}

TEST_CASE("brzozowski minimization matches hopcroft") {
  WitnessPair w = gen_cat_rev_witness(2, 3);
  Dfa direct = cat_rev_direct(w.a, w.b);
  CHECK(minimize_brzozowski(direct).state_count == 11);  // 2*8 - 4 - 2 + 1
  CHECK(minimize(direct) == minimize_brzozowski(direct));

  SplitMix64 rng(501);
  for (int round = 0; round < 50; ++round) {
    int states = 1 + static_cast<int>(rng.below(7));
    int k = 1 + static_cast<int>(rng.below(3));
    Dfa d = random_dfa(states, Alphabet::first(k), 0.3, rng.next());
    CHECK(minimize(d) == minimize_brzozowski(d));
  }
}

TEST_CASE("canonicalize is idempotent and permutation-invariant") {
  Dfa base = minimize(cat_rev_direct(gen_cat_rev_witness(2, 2).a,
                                     gen_cat_rev_witness(2, 2).b));
  CHECK(canonicalize(base) == base);

  // Hand permutation of the mergeable 3-state example.
  Dfa d = three_state_mergeable();
  Dfa p = permuted(d, {2, 0, 1});
  CHECK(canonicalize(d) == canonicalize(p));

  // Random permutations of random trimmed automata.
  SplitMix64 rng(88);
  for (int round = 0; round < 20; ++round) {
    int k = 1 + static_cast<int>(rng.below(3));
    Dfa x = trim_reachable(
        random_dfa(2 + static_cast<int>(rng.below(5)), Alphabet::first(k),
                   0.4, rng.next()));
    std::vector<StateId> perm(x.state_count);
    for (StateId i = 0; i < x.state_count; ++i) perm[i] = i;
    for (StateId i = x.state_count - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    CHECK(canonicalize(x) == canonicalize(permuted(x, perm)));
  }
}

TEST_CASE("canonicalize rejects unreachable states") {
  // State 1 is unreachable: 0 loops on itself.
  Dfa d = make_dfa(Alphabet::first(1), 2, 0, {0}, {{0}, {0}});
  CHECK_THROWS_AS(canonicalize(d), std::invalid_argument);
  CHECK(trim_reachable(d).state_count == 1);
}

TEST_CASE("equivalence is reflexive and reports lambda for a* vs a+") {
  Dfa star = sigma_star_dfa(Alphabet::first(1));
  CHECK(check_equivalence(star, star).equivalent);

  // a+ as a 2-state DFA.
  Dfa plus = make_dfa(Alphabet::first(1), 2, 0, {1}, {{1}, {1}});
  EquivalenceResult r = check_equivalence(star, plus);
  CHECK_FALSE(r.equivalent);
  CHECK(r.counterexample.empty());  // lambda separates them
  CHECK_FALSE(is_equivalent(star, plus));

  Dfa other = sigma_star_dfa(Alphabet::first(2));
  CHECK_THROWS_AS(check_equivalence(star, other), std::invalid_argument);
}

TEST_CASE("counterexamples are the length-lex least distinguishing words") {
  SplitMix64 rng(909);
  int checked_differences = 0;
  for (int round = 0; round < 60; ++round) {
    int k = 1 + static_cast<int>(rng.below(3));
    Alphabet sigma = Alphabet::first(k);
    Dfa a = random_dfa(1 + static_cast<int>(rng.below(4)), sigma, 0.4,
                       rng.next());
    Dfa b = random_dfa(1 + static_cast<int>(rng.below(4)), sigma, 0.4,
                       rng.next());
    EquivalenceResult r = check_equivalence(a, b);
    auto brute = oracle::first_difference(a, b, 8);
    if (r.equivalent) {
      CHECK_FALSE(brute.has_value());
    } else {
      REQUIRE(brute.has_value());
      CHECK(r.counterexample == *brute);
      CHECK(oracle::dfa_accepts(a, r.counterexample) !=
            oracle::dfa_accepts(b, r.counterexample));
      ++checked_differences;
    }
  }
  CHECK(checked_differences > 10);  // the corpus actually exercised the path
}

TEST_CASE("reversal route agrees with the word-level oracle") {
  Dfa n = gen_cat_rev_witness(2, 2).b;
  Dfa det_rev = determinize(reverse_nfa(n)).dfa;
  // Brute force: w in L^R iff reversed(w) in L.
  auto lhs = oracle::signature(
      [&](const Word& w) { return oracle::dfa_accepts(det_rev, w); }, 3, 6);
  auto rhs = oracle::signature(
      [&](const Word& w) {
        return oracle::dfa_accepts(n, oracle::reversed(w));
      },
      3, 6);
  CHECK(lhs == rhs);
}

TEST_CASE("accepts follows the witness transition tables") {
  // Empty word: acceptance is exactly "initial is final".
  CHECK(accepts(sigma_star_dfa(Alphabet::abc()), {}));
  CHECK_FALSE(accepts(empty_language_dfa(Alphabet::abc()), {}));

  // First-family automaton at m = 3: letter a advances q0 -> q1, which is
  // not final (the only final state is q2).
  Dfa a3 = gen_cat_star_witness(3).a;
  CHECK(a3.delta[0][0] == 1);
  CHECK_FALSE(accepts(a3, {0}));
  // At m = 2 the same step q0 -> q1 lands on the final state.
  CHECK(accepts(gen_cat_star_witness(2).a, {0}));

  // Second-family automaton N at n = 2: c sends 0 to 1, not final.
  Dfa n2 = gen_cat_rev_witness(2, 2).b;
  CHECK(n2.delta[0][2] == 1);
  CHECK_FALSE(accepts(n2, {2}));

  CHECK_THROWS_AS(accepts(a3, {7}), std::invalid_argument);
}
