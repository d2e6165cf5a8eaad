#include "sclab/combined.hpp"

#include <limits>
#include <map>
#include <string>
#include <utility>

#include "sclab/rational.hpp"

namespace sclab {

// --- closed-form bounds -------------------------------------------------------

namespace {

std::uint64_t pow2(int e) {
  if (e < 0 || e > 63)
    throw std::domain_error("bound: 2^" + std::to_string(e) +
                            " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::domain_error("bound: product does not fit in 64 bits");
  return a * b;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::uint64_t upper_bound_cat_star(const BoundQuery& q) {
  require(q.m >= 2 && q.n >= 2, "upper_bound_cat_star: needs m >= 2 and n >= 2");
  require(q.k2 >= 1 && q.k2 <= q.n - 1,
          "upper_bound_cat_star: needs 1 <= k2 <= n-1");
  require(q.k1 >= 0 && q.k1 <= q.m, "upper_bound_cat_star: needs 0 <= k1 <= m");
  std::uint64_t half = pow2(q.n - 1);
  std::uint64_t quarter = pow2(q.n - q.k2 - 1);
  return mul(static_cast<std::uint64_t>(q.m), half + quarter) -
         mul(static_cast<std::uint64_t>(q.k1), quarter);
}

std::uint64_t upper_bound_cat_rev(const BoundQuery& q) {
  require(q.m >= 1 && q.n >= 1, "upper_bound_cat_rev: needs m >= 1 and n >= 1");
  require(q.k1 >= 1 && q.k1 <= q.m, "upper_bound_cat_rev: needs 1 <= k1 <= m");
  require(q.k2 >= 1 && q.k2 <= q.n, "upper_bound_cat_rev: needs 1 <= k2 <= n");
  // m 2^n - k1 2^(n-k2) (2^k2 - 1) - m + 1, grouped to stay nonnegative.
  std::uint64_t total = mul(static_cast<std::uint64_t>(q.m), pow2(q.n));
  std::uint64_t merged =
      mul(static_cast<std::uint64_t>(q.k1), pow2(q.n) - pow2(q.n - q.k2));
  return total - merged - static_cast<std::uint64_t>(q.m) + 1;
}

std::uint64_t tight_bound_cat_star(int m, int n, StarCase which) {
  require(m >= 1 && n >= 1, "tight_bound_cat_star: needs m >= 1 and n >= 1");
  if (m == 1) return 1;  // L1 is empty or universal; either way sc = 1
  if (n == 1) return static_cast<std::uint64_t>(m);
  switch (which) {
    case StarCase::general:
      return mul(3 * static_cast<std::uint64_t>(m) - 1, pow2(n - 2));
    case StarCase::final_is_initial:
      return mul(static_cast<std::uint64_t>(m), pow2(n)) - pow2(n - 1);
  }
  throw std::invalid_argument("tight_bound_cat_star: bad case");
}

std::uint64_t tight_bound_cat_rev(int m, int n) {
  require(m >= 1 && n >= 1, "tight_bound_cat_rev: needs m >= 1 and n >= 1");
  // Uniform for every m, n >= 1: collapses to m at n = 1 and to 2^(n-1)
  // at m = 1.
  return mul(static_cast<std::uint64_t>(m), pow2(n)) - pow2(n - 1) -
         static_cast<std::uint64_t>(m) + 1;
}

std::uint64_t composed_bound_cat_star(int m, int n) {
  require(m >= 1 && n >= 2, "composed_bound_cat_star: needs m >= 1 and n >= 2");
  std::uint64_t exp = pow2(n - 1) + pow2(n - 2) - 1;
  if (exp > 63)
    throw std::domain_error("composed_bound_cat_star: value does not fit in 64 bits");
  return mul(2 * static_cast<std::uint64_t>(m) - 1, pow2(static_cast<int>(exp)));
}

std::uint64_t composed_bound_cat_rev(int m, int n) {
  require(m >= 1 && n >= 1, "composed_bound_cat_rev: needs m >= 1 and n >= 1");
  if (n > 5)
    throw std::domain_error("composed_bound_cat_rev: value does not fit in 64 bits");
  int exp = 1 << n;
  return mul(static_cast<std::uint64_t>(m), pow2(exp)) - pow2(exp - 1);
}

// --- catenation with star -----------------------------------------------------

namespace {

void check_same_alphabet(const Dfa& a, const Dfa& b, const char* who) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument(std::string(who) + ": alphabets differ");
}

}  // namespace

CatStarConstruction cat_star_construct(const Dfa& a, const Dfa& b) {
  validate(a);
  validate(b);
  check_same_alphabet(a, b, "cat_star_construct");
  require(a.state_count >= 2 && b.state_count >= 2,
          "cat_star_construct: needs m >= 2 and n >= 2");

  const StateId s2 = b.initial;
  const StateSet f0 = set_erase(b.finals, s2);  // non-initial finals of b
  require(!f0.empty(),
          "cat_star_construct: second automaton needs a non-initial final "
          "state (degenerate inputs reduce to plain catenation)");

  const int nsym = a.alphabet.size();

  // A construction state is the pair (q, g): q is the deterministic
  // first-automaton component, g the set of second-automaton states. The
  // sentinel s2' is implied by q being final, so it is not part of the key.
  using Key = std::pair<StateId, StateSet>;
  std::map<Key, StateId> ids;
  std::vector<Key> worklist;
  auto intern = [&](StateId q, StateSet g) -> StateId {
    auto [it, inserted] = ids.try_emplace(Key{q, std::move(g)}, 0);
    if (inserted) {
      it->second = static_cast<StateId>(worklist.size());
      worklist.push_back(it->first);
    }
    return it->second;
  };

  intern(a.initial, {});

  Dfa d;
  d.alphabet = a.alphabet;
  d.initial = 0;
  std::vector<CatStarState> labels;

  for (size_t next = 0; next < worklist.size(); ++next) {
    const auto [q, g] = worklist[next];

    // Invariant carried by every materialized state: once g touches a
    // non-initial final, the re-entered initial state must be present.
    if (sets_intersect(g, f0) && !set_contains(g, s2))
      throw std::logic_error("cat_star_construct: re-entry invariant broken");

    labels.push_back(CatStarState{q, a.is_final(q), g});
    if (a.is_final(q) || sets_intersect(g, b.finals))
      d.finals.push_back(static_cast<StateId>(next));

    std::vector<StateId> row(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c) {
      StateId q2 = a.delta[q][c];
      StateSet g2;
      for (StateId p : g) g2 = set_insert(std::move(g2), b.delta[p][c]);
      // The sentinel mirrors the second initial state's outgoing row.
      if (a.is_final(q)) g2 = set_insert(std::move(g2), b.delta[s2][c]);
      if (sets_intersect(g2, f0)) {
        // A star segment just completed: re-enter the initial state.
        g2 = set_insert(std::move(g2), s2);
      } else if (a.is_final(q2)) {
        // Twin merge: with the sentinel present and no non-initial final in
        // g2, the states with and without s2 are equivalent. Keep the
        // representative without s2.
        g2 = set_erase(std::move(g2), s2);
      }
      row[static_cast<size_t>(c)] = intern(q2, std::move(g2));
    }
    d.delta.push_back(std::move(row));
  }

  d.state_count = static_cast<int>(worklist.size());
  d.finals = normalized(std::move(d.finals));
  validate(d);
  return CatStarConstruction{std::move(d), std::move(labels)};
}

Dfa cat_star_direct(const Dfa& a, const Dfa& b) {
  return cat_star_construct(a, b).dfa;
}

// --- catenation with reversal ---------------------------------------------------

CatRevConstruction cat_rev_construct(const Dfa& a, const Dfa& b) {
  validate(a);
  validate(b);
  check_same_alphabet(a, b, "cat_rev_construct");

  const int n = b.state_count;
  const int nsym = a.alphabet.size();
  StateSet full;
  for (StateId q = 0; q < n; ++q) full.push_back(q);

  // Pairs <i, j>; every pair with j = Q of the second automaton is one
  // accepting sink, keyed with i = -1 and labeled by its first discovery.
  using Key = std::pair<StateId, StateSet>;
  std::map<Key, StateId> ids;
  std::vector<Key> worklist;
  std::vector<CatRevState> labels;
  auto intern = [&](StateId i, StateSet j) -> StateId {
    Key key{j == full ? -1 : i, std::move(j)};
    auto [it, inserted] = ids.try_emplace(std::move(key), 0);
    if (inserted) {
      it->second = static_cast<StateId>(worklist.size());
      worklist.push_back(it->first);
      labels.push_back(CatRevState{i, it->first.second});
    }
    return it->second;
  };

  // Inverse transitions of b, i.e. the reversal NFA's forward steps.
  std::vector<std::vector<StateSet>> pre(
      static_cast<size_t>(n), std::vector<StateSet>(static_cast<size_t>(nsym)));
  for (StateId p = 0; p < n; ++p)
    for (int c = 0; c < nsym; ++c)
      pre[static_cast<size_t>(b.delta[p][c])][static_cast<size_t>(c)].push_back(p);

  {
    StateSet j0 = a.is_final(a.initial) ? b.finals : StateSet{};
    intern(a.initial, std::move(j0));
  }

  Dfa d;
  d.alphabet = a.alphabet;
  d.initial = 0;

  for (size_t next = 0; next < worklist.size(); ++next) {
    const auto [i, j] = worklist[next];

    // Entering a final first component must have seeded all of b's finals.
    if (i >= 0 && a.is_final(i) && !set_includes(j, b.finals))
      throw std::logic_error("cat_rev_construct: seeding invariant broken");

    if (set_contains(j, b.initial))
      d.finals.push_back(static_cast<StateId>(next));

    std::vector<StateId> row(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c) {
      StateId i2 = a.delta[i < 0 ? labels[next].i : i][c];
      StateSet j2;
      for (StateId q : j)
        j2 = set_union(std::move(j2), pre[static_cast<size_t>(q)][static_cast<size_t>(c)]);
      if (a.is_final(i2)) j2 = set_union(std::move(j2), b.finals);
      row[static_cast<size_t>(c)] = intern(i2, std::move(j2));
    }
    d.delta.push_back(std::move(row));
  }

  d.state_count = static_cast<int>(worklist.size());
  d.finals = normalized(std::move(d.finals));
  validate(d);
  return CatRevConstruction{std::move(d), std::move(labels)};
}

Dfa cat_rev_direct(const Dfa& a, const Dfa& b) {
  return cat_rev_construct(a, b).dfa;
}

// --- routed minimal results -----------------------------------------------------

Dfa cat_star_minimal(const Dfa& a, const Dfa& b) {
  validate(a);
  validate(b);
  check_same_alphabet(a, b, "cat_star_minimal");
  if (a.state_count == 1) {
    // L(a) is empty or universal; catenating a starred language (which
    // always contains the empty word) keeps it that way.
    return a.finals.empty() ? empty_language_dfa(a.alphabet)
                            : sigma_star_dfa(a.alphabet);
  }
  if (b.finals.empty()) return minimize(a);  // L(b)* = {lambda}
  if (set_erase(b.finals, b.initial).empty()) {
    // Only final state is initial: L(b) is closed under catenation and
    // contains lambda, so L(b)* = L(b).
    return minimize(determinize(catenate_nfa(a, b)).dfa);
  }
  return minimize(cat_star_direct(a, b));
}

Dfa cat_rev_minimal(const Dfa& a, const Dfa& b) {
  return minimize(cat_rev_direct(a, b));
}

}  // namespace sclab
