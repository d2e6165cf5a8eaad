#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sclab/automata.hpp"
#include "sclab/combined.hpp"
#include "sclab/rational.hpp"
#include "sclab/witness.hpp"

using namespace sclab;

namespace {

Dfa naive_cat_star(const Dfa& a, const Dfa& b) {
  Dfa star = determinize(star_nfa(b)).dfa;
  return minimize(determinize(catenate_nfa(a, star)).dfa);
}

Dfa naive_cat_rev(const Dfa& a, const Dfa& b) {
  Dfa rev = determinize(reverse_nfa(b)).dfa;
  return minimize(determinize(catenate_nfa(a, rev)).dfa);
}

}  // namespace

TEST_CASE("cat-star witness family shape") {
  WitnessPair w = gen_cat_star_witness(2);
  CHECK(w.family == "cat-star");
  CHECK(w.m == 2);
  CHECK(w.n == 2);
  CHECK(w.predicted == 5);
  CHECK(w.a.alphabet == Alphabet::abc());
  CHECK(w.a.state_count == 2);
  CHECK(w.b.state_count == 2);
  // Fixed transitions of the second automaton.
  CHECK(w.b.delta[0] == std::vector<StateId>{1, 0, 0});
  CHECK(w.b.delta[1] == std::vector<StateId>{0, 1, 0});
  CHECK(w.b.initial == 0);
  CHECK(w.b.finals == StateSet{1});

  CHECK(gen_cat_star_witness(3).predicted == 8);
  CHECK(gen_cat_star_witness(6).predicted == 17);
  CHECK_THROWS_AS(gen_cat_star_witness(1), std::invalid_argument);
}

TEST_CASE("cat-star witnesses are minimal as given and reach the bound") {
  for (int m = 2; m <= 6; ++m) {
    WitnessPair w = gen_cat_star_witness(m);
    // Each operand is itself minimal.
    CHECK(minimize(w.a).state_count == m);
    CHECK(minimize(w.b).state_count == 2);
    // Tightness through the direct construction and through the pipeline.
    CHECK(minimize(cat_star_direct(w.a, w.b)).state_count ==
          static_cast<int>(w.predicted));
    CHECK(naive_cat_star(w.a, w.b).state_count ==
          static_cast<int>(w.predicted));
  }
}

TEST_CASE("cat-rev witness family shape") {
  WitnessPair w = gen_cat_rev_witness(3, 4);
  CHECK(w.family == "cat-rev");
  CHECK(w.predicted == 38);  // 48 - 8 - 3 + 1
  CHECK(w.a.state_count == 3);
  CHECK(w.b.state_count == 4);
  // delta_N(0, a) = n - 1 and the c-swap on {0, 1}.
  CHECK(w.b.delta[0][0] == 3);
  CHECK(w.b.delta[1][0] == 0);
  CHECK(w.b.delta[0][2] == 1);
  CHECK(w.b.delta[1][2] == 0);
  CHECK(w.b.delta[2][2] == 2);
  // M: a and b hold, c cycles.
  CHECK(w.a.delta[1][0] == 1);
  CHECK(w.a.delta[1][1] == 1);
  CHECK(w.a.delta[2][2] == 0);

  CHECK(gen_cat_rev_witness(2, 2).predicted == 5);
  CHECK(gen_cat_rev_witness(4, 5).predicted == 109);
  CHECK_THROWS_AS(gen_cat_rev_witness(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_cat_rev_witness(2, 1), std::invalid_argument);
}

TEST_CASE("cat-rev witnesses are minimal as given and reach the bound") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      WitnessPair w = gen_cat_rev_witness(m, n);
      CHECK(minimize(w.a).state_count == m);
      CHECK(minimize(w.b).state_count == n);
      CHECK(minimize(cat_rev_direct(w.a, w.b)).state_count ==
            static_cast<int>(w.predicted));
    }
  // One pipeline cross-check on a larger cell.
  WitnessPair w = gen_cat_rev_witness(3, 5);
  CHECK(naive_cat_rev(w.a, w.b).state_count == static_cast<int>(w.predicted));
}

TEST_CASE("search finds the two-state cat-rev witness at m = 1") {
  SearchBudget budget;
  budget.alphabet_size = 1;
  budget.max_candidates = 100000;
  SearchResult r = search_witness(SearchOp::cat_rev, 1, 2, 2,
                                  SearchConstraint::none, budget);
  REQUIRE(r.witness.has_value());
  CHECK(r.certificate.found);
  CHECK_FALSE(r.certificate.exhausted);
  CHECK(r.best_size == 2);
  // The returned pair really measures 2 through the pipeline.
  CHECK(naive_cat_rev(r.witness->a, r.witness->b).state_count == 2);
  // Deterministic enumeration: a second run returns the same pair.
  SearchResult again = search_witness(SearchOp::cat_rev, 1, 2, 2,
                                      SearchConstraint::none, budget);
  CHECK(again.witness->a == r.witness->a);
  CHECK(again.witness->b == r.witness->b);
}

TEST_CASE("unreachable targets exhaust the space with a certificate") {
  SearchBudget budget;
  budget.alphabet_size = 1;
  budget.max_candidates = 100000;
  // Above the upper bound: m * 2^n at (1, 2) caps at 4; ask for 40.
  SearchResult r = search_witness(SearchOp::cat_rev, 1, 2, 40,
                                  SearchConstraint::none, budget);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.certificate.exhausted);
  CHECK_FALSE(r.certificate.found);
  CHECK(r.certificate.space_size > 0);
  CHECK(r.certificate.scanned > 0);
  CHECK(r.best_size < 40);
  // The certificate text names the space it covered.
  std::string text = r.certificate.describe();
  CHECK(text.find("exhausted=yes") != std::string::npos);
  CHECK(text.find("space=") != std::string::npos);
}

TEST_CASE("search constraints restrict the candidate sides") {
  SearchBudget budget;
  budget.alphabet_size = 2;
  budget.max_candidates = 1000000;

  // Second operand pinned to Sigma*: the combined language is L1 . Sigma*,
  // and m states are always enough.
  SearchResult r = search_witness(SearchOp::cat_rev, 3, 1, 3,
                                  SearchConstraint::second_sigma_star, budget);
  REQUIRE(r.witness.has_value());
  CHECK(is_equivalent(r.witness->b, sigma_star_dfa(Alphabet::first(2))));

  // First operand pinned to Sigma*.
  SearchResult s = search_witness(SearchOp::cat_rev, 1, 2, 2,
                                  SearchConstraint::first_sigma_star, budget);
  REQUIRE(s.witness.has_value());
  CHECK(is_equivalent(s.witness->a, sigma_star_dfa(Alphabet::first(2))));

  // Constraint and shape must match.
  CHECK_THROWS_AS(
      search_witness(SearchOp::cat_rev, 2, 2, 5,
                     SearchConstraint::first_sigma_star, budget),
      std::invalid_argument);
  CHECK_THROWS_AS(
      search_witness(SearchOp::cat_rev, 2, 2, 5,
                     SearchConstraint::second_sigma_star, budget),
      std::invalid_argument);
  CHECK_THROWS_AS(
      search_witness(SearchOp::cat_rev, 2, 2, 5,
                     SearchConstraint::b_finals_initial_only, budget),
      std::invalid_argument);
}

TEST_CASE("b-final-initial search hits the special-case bound") {
  SearchBudget budget;
  budget.alphabet_size = 2;
  budget.max_candidates = 1000000;
  SearchResult r =
      search_witness(SearchOp::cat_star, 2, 2, 6,
                     SearchConstraint::b_finals_initial_only, budget);
  REQUIRE(r.witness.has_value());
  // The structural constraint holds on the returned pair.
  CHECK(r.witness->b.finals == StateSet{r.witness->b.initial});
  // 6 = m * 2^n - 2^(n-1) at (2, 2).
  CHECK(tight_bound_cat_star(2, 2, StarCase::final_is_initial) == 6);
  CHECK(naive_cat_star(r.witness->a, r.witness->b).state_count == 6);
}

TEST_CASE("cat-phi search reaches the plain-catenation bound") {
  SearchBudget budget;
  budget.alphabet_size = 2;
  budget.max_candidates = 5000000;
  SearchResult r = search_witness(SearchOp::cat_phi, 2, 2, 6,
                                  SearchConstraint::none, budget);
  REQUIRE(r.witness.has_value());
  // Re-measure by hand: catenate with the pairwise-swapped second operand.
  LetterMap phi = pairwise_swap_map(Alphabet::first(2));
  Dfa measured = minimize(
      determinize(catenate_nfa(r.witness->a, map_letters(r.witness->b, phi)))
          .dfa);
  CHECK(measured.state_count == 6);
}

TEST_CASE("random-mode search is reproducible and budget-bounded") {
  SearchBudget budget;
  budget.alphabet_size = 3;
  budget.max_candidates = 400;
  budget.seed = 99;
  budget.mode = SearchMode::random;
  SearchResult r1 = search_witness(SearchOp::cat_rev, 2, 2, 5,
                                   SearchConstraint::none, budget);
  SearchResult r2 = search_witness(SearchOp::cat_rev, 2, 2, 5,
                                   SearchConstraint::none, budget);
  CHECK(r1.certificate.scanned == r2.certificate.scanned);
  CHECK(r1.best_size == r2.best_size);
  CHECK(r1.witness.has_value() == r2.witness.has_value());
  if (r1.witness) {
    CHECK(r1.witness->a == r2.witness->a);
    CHECK(r1.witness->b == r2.witness->b);
  }
  CHECK(r1.certificate.scanned <= 400);
  // Random sampling never certifies absence.
  CHECK_FALSE(r1.certificate.exhausted);
}

TEST_CASE("exhaustive search over an oversized space is rejected") {
  SearchBudget budget;
  budget.alphabet_size = 3;
  budget.max_candidates = 1000;  // far below the 6-state pair space
  CHECK_THROWS_AS(search_witness(SearchOp::cat_rev, 6, 6, 5,
                                 SearchConstraint::none, budget),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_witness(SearchOp::cat_rev, 7, 2, 5,
                                 SearchConstraint::none, budget),
                  std::invalid_argument);
  budget.alphabet_size = 5;
  CHECK_THROWS_AS(search_witness(SearchOp::cat_rev, 2, 2, 5,
                                 SearchConstraint::none, budget),
                  std::invalid_argument);
}
