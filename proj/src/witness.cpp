#include "sclab/witness.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "sclab/combined.hpp"
#include "sclab/rational.hpp"
#include "sclab/rng.hpp"

namespace sclab {

// --- generated families -------------------------------------------------------

WitnessPair gen_cat_star_witness(int m) {
  if (m < 2) throw std::invalid_argument("gen_cat_star_witness: needs m >= 2");
  Alphabet sigma = Alphabet::abc();

  // First automaton: a cycles all m states; b and c cycle the first m-1
  // states while b sends the final state back one step and c holds it.
  std::vector<std::vector<StateId>> da(static_cast<size_t>(m),
                                       std::vector<StateId>(3));
  for (int i = 0; i < m; ++i) {
    da[static_cast<size_t>(i)][0] = (i + 1) % m;
    if (i <= m - 3)
      da[static_cast<size_t>(i)][1] = i + 1;
    else if (i == m - 2)
      da[static_cast<size_t>(i)][1] = 0;
    else
      da[static_cast<size_t>(i)][1] = m - 2;
    if (i <= m - 3)
      da[static_cast<size_t>(i)][2] = i + 1;
    else if (i == m - 2)
      da[static_cast<size_t>(i)][2] = 0;
    else
      da[static_cast<size_t>(i)][2] = m - 1;
  }
  Dfa a = make_dfa(sigma, m, 0, {m - 1}, std::move(da));

  // Second automaton: a swaps the two states, b holds, c resets to 0.
  Dfa b = make_dfa(sigma, 2, 0, {1}, {{1, 0, 0}, {0, 1, 0}});

  return WitnessPair{std::move(a), std::move(b), "cat-star", m, 2,
                     tight_bound_cat_star(m, 2, StarCase::general)};
}

WitnessPair gen_cat_rev_witness(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("gen_cat_rev_witness: needs m >= 2 and n >= 2");
  Alphabet sigma = Alphabet::abc();

  // First automaton: a and b hold every state, c advances the cycle.
  std::vector<std::vector<StateId>> da(static_cast<size_t>(m),
                                       std::vector<StateId>(3));
  for (int i = 0; i < m; ++i) {
    da[static_cast<size_t>(i)][0] = i;
    da[static_cast<size_t>(i)][1] = i;
    da[static_cast<size_t>(i)][2] = (i + 1) % m;
  }
  Dfa a = make_dfa(sigma, m, 0, {m - 1}, std::move(da));

  // Second automaton: a rotates downward (0 wraps to n-1), b maps 0 to 1 and
  // holds the rest, c swaps 0 and 1 and holds the rest.
  std::vector<std::vector<StateId>> db(static_cast<size_t>(n),
                                       std::vector<StateId>(3));
  for (int j = 0; j < n; ++j) {
    db[static_cast<size_t>(j)][0] = (j == 0) ? n - 1 : j - 1;
    db[static_cast<size_t>(j)][1] = (j == 0) ? 1 : j;
    db[static_cast<size_t>(j)][2] = (j <= 1) ? 1 - j : j;
  }
  Dfa b = make_dfa(sigma, n, 0, {0}, std::move(db));

  return WitnessPair{std::move(a), std::move(b), "cat-rev", m, n,
                     tight_bound_cat_rev(m, n)};
}

// --- search -------------------------------------------------------------------

std::string to_string(SearchOp op) {
  switch (op) {
    case SearchOp::cat_star: return "cat-star";
    case SearchOp::cat_rev: return "cat-rev";
    case SearchOp::cat_phi: return "cat-phi";
  }
  return "?";
}

std::string to_string(SearchConstraint c) {
  switch (c) {
    case SearchConstraint::none: return "none";
    case SearchConstraint::b_finals_initial_only: return "b-final-initial";
    case SearchConstraint::first_sigma_star: return "first-sigma-star";
    case SearchConstraint::second_sigma_star: return "second-sigma-star";
  }
  return "?";
}

std::string SearchCertificate::describe() const {
  std::string s = "search op=" + to_string(op) + " m=" + std::to_string(m) +
                  " n=" + std::to_string(n) +
                  " alphabet=" + std::to_string(alphabet_size) +
                  " constraint=" + to_string(constraint) +
                  " mode=" + (mode == SearchMode::exhaustive ? "exhaustive" : "random") +
                  " target=" + std::to_string(target) + "\n";
  s += "space=" + std::to_string(space_size) + " pairs, evaluated=" +
       std::to_string(scanned);
  if (mode == SearchMode::exhaustive)
    s += " (distinct: " + std::to_string(distinct_a) + " x " +
         std::to_string(distinct_b) + ")";
  s += "\n";
  s += std::string("exhausted=") + (exhausted ? "yes" : "no") +
       " found=" + (found ? "yes" : "no");
  return s;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b)
    throw std::invalid_argument("search: candidate space does not fit in 64 bits");
  return a * b;
}

// Dedup key: canonical form of the reachable part. Isomorphic reachable
// parts collapse to one representative, so languages are covered exactly once.
std::string reachable_key(const Dfa& d) {
  Dfa t = trim_reachable(d);
  std::string key = std::to_string(t.state_count);
  key += 'F';
  for (StateId f : t.finals) {
    key += std::to_string(f);
    key += ',';
  }
  key += 'T';
  for (const auto& row : t.delta)
    for (StateId s : row) {
      key += std::to_string(s);
      key += ',';
    }
  return key;
}

// Transition tables in lexicographic order: cell (state, symbol) with state
// major, the first cell most significant.
std::vector<std::vector<StateId>> decode_table(std::uint64_t index, int states,
                                               int nsym) {
  std::vector<std::vector<StateId>> delta(
      static_cast<size_t>(states), std::vector<StateId>(static_cast<size_t>(nsym)));
  for (int i = states - 1; i >= 0; --i)
    for (int c = nsym - 1; c >= 0; --c) {
      delta[static_cast<size_t>(i)][static_cast<size_t>(c)] =
          static_cast<StateId>(index % static_cast<std::uint64_t>(states));
      index /= static_cast<std::uint64_t>(states);
    }
  return delta;
}

// Final sets ordered by size, then by value of the characteristic vector.
std::vector<StateSet> final_sets(int states) {
  std::vector<StateSet> out;
  for (int pc = 0; pc <= states; ++pc)
    for (unsigned v = 0; v < (1u << states); ++v) {
      if (std::popcount(v) != pc) continue;
      StateSet f;
      for (int s = 0; s < states; ++s)
        if (v & (1u << s)) f.push_back(s);
      out.push_back(std::move(f));
    }
  return out;
}

struct Side {
  bool fixed_sigma_star = false;
  int states = 0;
  std::uint64_t tables = 0;
  std::vector<StateSet> finals;

  std::uint64_t space() const {
    return fixed_sigma_star
               ? 1
               : checked_mul(tables, static_cast<std::uint64_t>(finals.size()));
  }
};

Side make_side(int states, int nsym, bool sigma_star, bool finals_initial_only) {
  Side side;
  side.fixed_sigma_star = sigma_star;
  side.states = states;
  if (sigma_star) return side;
  side.tables = 1;
  for (int i = 0; i < states * nsym; ++i)
    side.tables = checked_mul(side.tables, static_cast<std::uint64_t>(states));
  side.finals =
      finals_initial_only ? std::vector<StateSet>{{0}} : final_sets(states);
  return side;
}

Dfa side_candidate(const Side& side, const Alphabet& sigma, std::uint64_t index) {
  if (side.fixed_sigma_star) return sigma_star_dfa(sigma);
  std::uint64_t fi = index % side.finals.size();
  std::uint64_t ti = index / side.finals.size();
  return Dfa{sigma, side.states, 0, side.finals[static_cast<size_t>(fi)],
             decode_table(ti, side.states, sigma.size())};
}

Dfa random_candidate(const Side& side, const Alphabet& sigma, SplitMix64& rng) {
  if (side.fixed_sigma_star) return sigma_star_dfa(sigma);
  std::vector<std::vector<StateId>> delta(
      static_cast<size_t>(side.states),
      std::vector<StateId>(static_cast<size_t>(sigma.size())));
  for (auto& row : delta)
    for (auto& cell : row)
      cell = static_cast<StateId>(rng.below(static_cast<std::uint64_t>(side.states)));
  const auto& f =
      side.finals[static_cast<size_t>(rng.below(side.finals.size()))];
  return Dfa{sigma, side.states, 0, f, std::move(delta)};
}

// Minimal combined size through the direct constructions (routed), the
// quantity the search is maximizing.
std::uint64_t measure(SearchOp op, const Dfa& a, const Dfa& b,
                      const LetterMap& phi) {
  switch (op) {
    case SearchOp::cat_star:
      return static_cast<std::uint64_t>(cat_star_minimal(a, b).state_count);
    case SearchOp::cat_rev:
      return static_cast<std::uint64_t>(cat_rev_minimal(a, b).state_count);
    case SearchOp::cat_phi:
      // Plain catenation with the letter-mapped second operand.
      return static_cast<std::uint64_t>(
          minimize(determinize(catenate_nfa(a, map_letters(b, phi))).dfa)
              .state_count);
  }
  throw std::invalid_argument("search: bad op");
}

// Fully NFA-based route, independent of the direct constructions; used to
// re-verify a hit before it is returned.
std::uint64_t oracle_measure(SearchOp op, const Dfa& a, const Dfa& b,
                             const LetterMap& phi) {
  // For cat_phi the second operand is rebuilt as (theta(L2))^R, which equals
  // phi(L2) but goes through a different pair of constructions than the
  // direct letter relabeling used by measure().
  Nfa second = op == SearchOp::cat_star
                   ? star_nfa(b)
                   : op == SearchOp::cat_rev
                         ? reverse_nfa(b)
                         : reverse_nfa(determinize(
                               antimorphic_involution(b, phi)).dfa);
  Dfa combined =
      determinize(catenate_nfa(a, determinize(second).dfa)).dfa;
  return static_cast<std::uint64_t>(minimize(combined).state_count);
}

}  // namespace

SearchResult search_witness(SearchOp op, int m, int n, std::uint64_t target,
                            SearchConstraint constraint,
                            const SearchBudget& budget) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("search: needs m >= 1 and n >= 1");
  if (budget.alphabet_size < 1 || budget.alphabet_size > 4)
    throw std::invalid_argument("search: alphabet size must be in 1..4");
  if (m > 6 || n > 6)
    throw std::invalid_argument("search: sides larger than 6 states are not supported");
  if (constraint == SearchConstraint::first_sigma_star && m != 1)
    throw std::invalid_argument("search: first-sigma-star requires m = 1");
  if (constraint == SearchConstraint::second_sigma_star && n != 1)
    throw std::invalid_argument("search: second-sigma-star requires n = 1");
  if (constraint == SearchConstraint::b_finals_initial_only &&
      op != SearchOp::cat_star)
    throw std::invalid_argument(
        "search: b-final-initial only applies to cat-star");

  const Alphabet sigma = Alphabet::first(budget.alphabet_size);
  const LetterMap phi = pairwise_swap_map(sigma);

  Side side_a = make_side(m, sigma.size(),
                          constraint == SearchConstraint::first_sigma_star, false);
  Side side_b = make_side(n, sigma.size(),
                          constraint == SearchConstraint::second_sigma_star,
                          constraint == SearchConstraint::b_finals_initial_only);

  SearchResult result;
  auto& cert = result.certificate;
  cert.op = op;
  cert.m = m;
  cert.n = n;
  cert.alphabet_size = budget.alphabet_size;
  cert.constraint = constraint;
  cert.mode = budget.mode;
  cert.target = target;
  cert.space_size = checked_mul(side_a.space(), side_b.space());

  auto consider = [&](const Dfa& a, const Dfa& b) -> bool {
    ++cert.scanned;
    std::uint64_t size = measure(op, a, b, phi);
    if (size > result.best_size || !result.best_pair) {
      result.best_size = size;
      result.best_pair = std::pair<Dfa, Dfa>{a, b};
    }
    if (size >= target) {
      if (oracle_measure(op, a, b, phi) != size)
        throw std::logic_error("search: direct and oracle sizes disagree");
      result.witness = WitnessPair{a, b, "search:" + to_string(op), m, n, size};
      cert.found = true;
      return true;
    }
    return false;
  };

  if (budget.mode == SearchMode::exhaustive) {
    if (cert.space_size > budget.max_candidates)
      throw std::invalid_argument(
          "search: exhaustive space of " + std::to_string(cert.space_size) +
          " pairs exceeds max_candidates=" + std::to_string(budget.max_candidates));

    // Deduplicate each side by the canonical form of its reachable part,
    // keeping the first (lexicographically least) representative.
    auto dedup = [&](const Side& side) {
      std::vector<Dfa> kept;
      std::unordered_set<std::string> seen;
      for (std::uint64_t i = 0; i < side.space(); ++i) {
        Dfa d = side_candidate(side, sigma, i);
        if (seen.insert(reachable_key(d)).second) kept.push_back(std::move(d));
      }
      return kept;
    };
    std::vector<Dfa> as = dedup(side_a);
    std::vector<Dfa> bs = dedup(side_b);
    cert.distinct_a = as.size();
    cert.distinct_b = bs.size();

    for (const Dfa& a : as) {
      for (const Dfa& b : bs)
        if (consider(a, b)) break;
      if (cert.found) break;
    }
    cert.exhausted = !cert.found;  // covered everything when nothing was found
  } else {
    SplitMix64 rng(budget.seed);
    for (std::uint64_t i = 0; i < budget.max_candidates && !cert.found; ++i) {
      Dfa a = random_candidate(side_a, sigma, rng);
      Dfa b = random_candidate(side_b, sigma, rng);
      consider(a, b);
    }
    cert.exhausted = false;
  }

  return result;
}

}  // namespace sclab
