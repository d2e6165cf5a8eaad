#include "sclab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "sclab/rational.hpp"

namespace sclab {

// --- sorted-set helpers -----------------------------------------------------

bool set_contains(const StateSet& s, StateId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool sets_intersect(const StateSet& a, const StateSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

StateSet set_insert(StateSet s, StateId x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
  return s;
}

StateSet set_erase(StateSet s, StateId x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) s.erase(it);
  return s;
}

bool set_includes(const StateSet& outer, const StateSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

StateSet normalized(StateSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// --- alphabet ---------------------------------------------------------------

std::optional<SymbolId> Alphabet::index_of(std::string_view letter) const {
  for (int i = 0; i < size(); ++i)
    if (letters[i] == letter) return i;
  return std::nullopt;
}

Alphabet Alphabet::abc() { return Alphabet{{"a", "b", "c"}}; }

Alphabet Alphabet::first(int k) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("Alphabet::first: k must be in 1..4");
  static const char* names[] = {"a", "b", "c", "d"};
  Alphabet sigma;
  for (int i = 0; i < k; ++i) sigma.letters.emplace_back(names[i]);
  return sigma;
}

void validate(const Alphabet& sigma) {
  if (sigma.letters.empty())
    throw std::invalid_argument("alphabet: must not be empty");
  for (const auto& l : sigma.letters) {
    if (l.empty()) throw std::invalid_argument("alphabet: empty letter");
    if (l.find_first_of(" \t\n\r#") != std::string::npos)
      throw std::invalid_argument("alphabet: letter '" + l +
                                  "' contains whitespace or '#'");
  }
  for (size_t i = 0; i < sigma.letters.size(); ++i)
    for (size_t j = i + 1; j < sigma.letters.size(); ++j)
      if (sigma.letters[i] == sigma.letters[j])
        throw std::invalid_argument("alphabet: duplicate letter '" +
                                    sigma.letters[i] + "'");
}

// --- validation -------------------------------------------------------------

namespace {

void check_state_set(const StateSet& s, int state_count, const char* what) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= state_count)
      throw std::invalid_argument(std::string(what) + ": state id " +
                                  std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(what) +
                                  ": not sorted / has duplicates");
  }
}

}  // namespace

void validate(const Dfa& d) {
  validate(d.alphabet);
  if (d.state_count < 1)
    throw std::invalid_argument("dfa: needs at least one state");
  if (d.initial < 0 || d.initial >= d.state_count)
    throw std::invalid_argument("dfa: initial state out of range");
  check_state_set(d.finals, d.state_count, "dfa finals");
  if (static_cast<int>(d.delta.size()) != d.state_count)
    throw std::invalid_argument("dfa: delta must have one row per state");
  for (const auto& row : d.delta) {
    if (static_cast<int>(row.size()) != d.alphabet.size())
      throw std::invalid_argument("dfa: delta row must cover every symbol");
    for (StateId t : row)
      if (t < 0 || t >= d.state_count)
        throw std::invalid_argument("dfa: transition target out of range");
  }
}

void validate(const Nfa& n) {
  validate(n.alphabet);
  if (n.state_count < 1)
    throw std::invalid_argument("nfa: needs at least one state");
  check_state_set(n.initials, n.state_count, "nfa initials");
  check_state_set(n.finals, n.state_count, "nfa finals");
  if (static_cast<int>(n.delta.size()) != n.state_count)
    throw std::invalid_argument("nfa: delta must have one row per state");
  for (const auto& row : n.delta) {
    if (static_cast<int>(row.size()) != n.alphabet.size())
      throw std::invalid_argument("nfa: delta row must cover every symbol");
    for (const auto& targets : row)
      check_state_set(targets, n.state_count, "nfa targets");
  }
}

Dfa make_dfa(Alphabet alphabet, int state_count, StateId initial,
             StateSet finals, std::vector<std::vector<StateId>> delta) {
  Dfa d{std::move(alphabet), state_count, initial, normalized(std::move(finals)),
        std::move(delta)};
  validate(d);
  return d;
}

Nfa make_nfa(Alphabet alphabet, int state_count, StateSet initials,
             StateSet finals, std::vector<std::vector<StateSet>> delta) {
  Nfa n{std::move(alphabet), state_count, normalized(std::move(initials)),
        normalized(std::move(finals)), std::move(delta)};
  for (auto& row : n.delta)
    for (auto& targets : row) targets = normalized(std::move(targets));
  validate(n);
  return n;
}

Dfa sigma_star_dfa(Alphabet alphabet) {
  validate(alphabet);
  int k = alphabet.size();
  return Dfa{std::move(alphabet), 1, 0, {0},
             {std::vector<StateId>(static_cast<size_t>(k), 0)}};
}

Dfa empty_language_dfa(Alphabet alphabet) {
  validate(alphabet);
  int k = alphabet.size();
  return Dfa{std::move(alphabet), 1, 0, {},
             {std::vector<StateId>(static_cast<size_t>(k), 0)}};
}

Nfa as_nfa(const Dfa& d) {
  validate(d);
  Nfa n;
  n.alphabet = d.alphabet;
  n.state_count = d.state_count;
  n.initials = {d.initial};
  n.finals = d.finals;
  n.delta.resize(d.state_count);
  for (int s = 0; s < d.state_count; ++s) {
    n.delta[s].resize(d.alphabet.size());
    for (int c = 0; c < d.alphabet.size(); ++c)
      n.delta[s][c] = {d.delta[s][c]};
  }
  return n;
}

// --- determinization --------------------------------------------------------

DeterminizeResult determinize(const Nfa& n) {
  validate(n);
  const int nsym = n.alphabet.size();

  std::map<StateSet, StateId> ids;
  std::vector<StateSet> subsets;  // doubles as the BFS worklist
  auto intern = [&](StateSet s) -> StateId {
    auto [it, inserted] = ids.try_emplace(std::move(s), 0);
    if (inserted) {
      it->second = static_cast<StateId>(subsets.size());
      subsets.push_back(it->first);
    }
    return it->second;
  };

  intern(n.initials);

  Dfa d;
  d.alphabet = n.alphabet;
  d.initial = 0;
  for (size_t next = 0; next < subsets.size(); ++next) {
    // Copy: subsets may reallocate while successors are interned.
    const StateSet cur = subsets[next];
    std::vector<StateId> row(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c) {
      StateSet t;
      for (StateId q : cur) t = set_union(t, n.delta[q][c]);
      row[c] = intern(std::move(t));
    }
    d.delta.push_back(std::move(row));
    if (sets_intersect(cur, n.finals))
      d.finals.push_back(static_cast<StateId>(next));
  }
  d.state_count = static_cast<int>(subsets.size());
  return DeterminizeResult{std::move(d), SubsetLabel{std::move(subsets)}};
}

// --- reachability and canonical numbering -----------------------------------

namespace {

// Breadth-first discovery order from the initial state, symbols in alphabet
// order. order[new_id] = old_id for each reachable state.
std::vector<StateId> bfs_order(const Dfa& d) {
  std::vector<StateId> order;
  std::vector<char> seen(static_cast<size_t>(d.state_count), 0);
  order.push_back(d.initial);
  seen[static_cast<size_t>(d.initial)] = 1;
  for (size_t next = 0; next < order.size(); ++next) {
    StateId s = order[next];
    for (int c = 0; c < d.alphabet.size(); ++c) {
      StateId t = d.delta[s][c];
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        order.push_back(t);
      }
    }
  }
  return order;
}

Dfa renumber(const Dfa& d, const std::vector<StateId>& order) {
  std::vector<StateId> new_id(static_cast<size_t>(d.state_count), -1);
  for (size_t i = 0; i < order.size(); ++i)
    new_id[static_cast<size_t>(order[i])] = static_cast<StateId>(i);

  Dfa out;
  out.alphabet = d.alphabet;
  out.state_count = static_cast<int>(order.size());
  out.initial = 0;
  out.delta.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    out.delta[i].resize(d.alphabet.size());
    for (int c = 0; c < d.alphabet.size(); ++c)
      out.delta[i][c] = new_id[static_cast<size_t>(d.delta[order[i]][c])];
  }
  for (StateId f : d.finals)
    if (new_id[static_cast<size_t>(f)] >= 0)
      out.finals.push_back(new_id[static_cast<size_t>(f)]);
  out.finals = normalized(std::move(out.finals));
  return out;
}

}  // namespace

Dfa trim_reachable(const Dfa& d) {
  validate(d);
  return renumber(d, bfs_order(d));
}

Dfa canonicalize(const Dfa& d) {
  validate(d);
  auto order = bfs_order(d);
  if (static_cast<int>(order.size()) != d.state_count)
    throw std::invalid_argument("canonicalize: automaton has unreachable states");
  return renumber(d, order);
}

// --- minimization -----------------------------------------------------------

namespace {

// Hopcroft partition refinement on a trimmed complete DFA. Returns
// block_of[state]; blocks are the Myhill-Nerode classes.
std::vector<int> hopcroft_blocks(const Dfa& d) {
  const int n = d.state_count;
  const int nsym = d.alphabet.size();

  // Inverse transition lists: preds[c][q] = states p with delta[p][c] == q.
  std::vector<std::vector<std::vector<StateId>>> preds(
      static_cast<size_t>(nsym),
      std::vector<std::vector<StateId>>(static_cast<size_t>(n)));
  for (StateId p = 0; p < n; ++p)
    for (int c = 0; c < nsym; ++c)
      preds[static_cast<size_t>(c)][static_cast<size_t>(d.delta[p][c])]
          .push_back(p);

  // Refinable partition: elems holds states grouped by block,
  // loc[s] = index of s in elems, blk[s] = block id,
  // first/past = block extents, marked[b] = count of marked states
  // (kept at the front of the block).
  std::vector<StateId> elems(static_cast<size_t>(n));
  std::vector<int> loc(static_cast<size_t>(n));
  std::vector<int> blk(static_cast<size_t>(n), 0);
  std::vector<int> first{0}, past{n}, marked{0};

  for (int i = 0; i < n; ++i) {
    elems[static_cast<size_t>(i)] = i;
    loc[static_cast<size_t>(i)] = i;
  }

  std::vector<int> touched;  // blocks with at least one marked state
  auto mark = [&](StateId s) {
    int b = blk[static_cast<size_t>(s)];
    int i = loc[static_cast<size_t>(s)];
    int f = first[static_cast<size_t>(b)] + marked[static_cast<size_t>(b)];
    if (i < f) return;  // already marked
    std::swap(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(f)]);
    loc[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
    loc[static_cast<size_t>(elems[static_cast<size_t>(f)])] = f;
    if (marked[static_cast<size_t>(b)] == 0) touched.push_back(b);
    ++marked[static_cast<size_t>(b)];
  };

  // split block b at its marked boundary; returns the new block id (the
  // marked front becomes the new block) or -1 if no proper split.
  auto split = [&](int b) -> int {
    int f = first[static_cast<size_t>(b)];
    int mid = f + marked[static_cast<size_t>(b)];
    int p = past[static_cast<size_t>(b)];
    marked[static_cast<size_t>(b)] = 0;
    if (mid == f || mid == p) return -1;
    int nb = static_cast<int>(first.size());
    first.push_back(f);
    past.push_back(mid);
    marked.push_back(0);
    first[static_cast<size_t>(b)] = mid;
    for (int i = f; i < mid; ++i)
      blk[static_cast<size_t>(elems[static_cast<size_t>(i)])] = nb;
    return nb;
  };

  // Seed split {finals, non-finals}.
  for (StateId s : d.finals) mark(s);
  touched.clear();
  int seeded = split(0);

  // Worklist of (block, symbol) splitters. in_work tracks membership.
  std::vector<std::pair<int, int>> work;
  std::vector<std::vector<char>> in_work;
  auto ensure_block = [&](int b) {
    while (static_cast<int>(in_work.size()) <= b)
      in_work.emplace_back(static_cast<size_t>(nsym), 0);
  };
  auto push_work = [&](int b, int c) {
    ensure_block(b);
    if (!in_work[static_cast<size_t>(b)][static_cast<size_t>(c)]) {
      in_work[static_cast<size_t>(b)][static_cast<size_t>(c)] = 1;
      work.emplace_back(b, c);
    }
  };

  if (seeded >= 0) {
    // Queue the smaller half for every symbol.
    int small = (past[static_cast<size_t>(seeded)] -
                     first[static_cast<size_t>(seeded)] <=
                 past[0] - first[0])
                    ? seeded
                    : 0;
    for (int c = 0; c < nsym; ++c) push_work(small, c);
  }

  std::vector<StateId> splitter;
  while (!work.empty()) {
    auto [b, c] = work.back();
    work.pop_back();
    in_work[static_cast<size_t>(b)][static_cast<size_t>(c)] = 0;

    // Snapshot: marking mutates elems within other blocks only, but keep it
    // simple and copy the splitter contents.
    splitter.assign(
        elems.begin() + first[static_cast<size_t>(b)],
        elems.begin() + past[static_cast<size_t>(b)]);

    touched.clear();
    for (StateId q : splitter)
      for (StateId p : preds[static_cast<size_t>(c)][static_cast<size_t>(q)])
        mark(p);

    for (int tb : touched) {
      int nb = split(tb);
      if (nb < 0) continue;
      ensure_block(nb);
      // Hopcroft's trick: if (tb, x) is pending it still covers one half;
      // queue the new half. Otherwise queue the smaller half.
      int size_tb = past[static_cast<size_t>(tb)] - first[static_cast<size_t>(tb)];
      int size_nb = past[static_cast<size_t>(nb)] - first[static_cast<size_t>(nb)];
      for (int x = 0; x < nsym; ++x) {
        if (in_work[static_cast<size_t>(tb)][static_cast<size_t>(x)])
          push_work(nb, x);
        else
          push_work(size_nb <= size_tb ? nb : tb, x);
      }
    }
  }

  return blk;
}

}  // namespace

Dfa minimize(const Dfa& d0) {
  Dfa d = trim_reachable(d0);
  std::vector<int> blk = hopcroft_blocks(d);

  int nblocks = 0;
  for (int b : blk) nblocks = std::max(nblocks, b + 1);

  Dfa q;
  q.alphabet = d.alphabet;
  q.state_count = nblocks;
  q.initial = blk[static_cast<size_t>(d.initial)];
  q.delta.assign(static_cast<size_t>(nblocks),
                 std::vector<StateId>(static_cast<size_t>(d.alphabet.size()), -1));
  for (StateId s = 0; s < d.state_count; ++s)
    for (int c = 0; c < d.alphabet.size(); ++c)
      q.delta[static_cast<size_t>(blk[static_cast<size_t>(s)])]
             [static_cast<size_t>(c)] =
          blk[static_cast<size_t>(d.delta[s][c])];
  for (StateId f : d.finals) q.finals.push_back(blk[static_cast<size_t>(f)]);
  q.finals = normalized(std::move(q.finals));
  return canonicalize(q);
}

Dfa minimize_brzozowski(const Dfa& d) {
  // Double reversal: determinizing the reversal of an accessible automaton
  // yields the minimal DFA of the reversed language; doing it twice lands on
  // the minimal DFA of L(d). determinize() numbers states canonically.
  Dfa t = trim_reachable(d);
  Dfa r = determinize(reverse_nfa(t)).dfa;
  return determinize(reverse_nfa(r)).dfa;
}

// --- equivalence and membership ----------------------------------------------

EquivalenceResult check_equivalence(const Dfa& a, const Dfa& b) {
  validate(a);
  validate(b);
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("check_equivalence: alphabets differ");

  const int nsym = a.alphabet.size();
  auto key = [&](StateId p, StateId q) {
    return static_cast<int64_t>(p) * b.state_count + q;
  };

  struct Node {
    StateId p, q;
    int parent;      // index into the BFS list, -1 at the root
    SymbolId via;    // symbol taken from the parent
  };
  std::vector<Node> nodes;
  std::vector<char> seen(static_cast<size_t>(a.state_count) *
                             static_cast<size_t>(b.state_count),
                         0);

  nodes.push_back({a.initial, b.initial, -1, -1});
  seen[static_cast<size_t>(key(a.initial, b.initial))] = 1;

  for (size_t next = 0; next < nodes.size(); ++next) {
    Node cur = nodes[next];
    if (a.is_final(cur.p) != b.is_final(cur.q)) {
      Word w;
      for (int i = static_cast<int>(next); nodes[static_cast<size_t>(i)].parent >= 0;
           i = nodes[static_cast<size_t>(i)].parent)
        w.push_back(nodes[static_cast<size_t>(i)].via);
      std::reverse(w.begin(), w.end());
      return EquivalenceResult{false, std::move(w)};
    }
    for (int c = 0; c < nsym; ++c) {
      StateId p2 = a.delta[cur.p][c];
      StateId q2 = b.delta[cur.q][c];
      auto k = static_cast<size_t>(key(p2, q2));
      if (!seen[k]) {
        seen[k] = 1;
        nodes.push_back({p2, q2, static_cast<int>(next), c});
      }
    }
  }
  return EquivalenceResult{true, {}};
}

bool is_equivalent(const Dfa& a, const Dfa& b) {
  return check_equivalence(a, b).equivalent;
}

bool accepts(const Dfa& d, const Word& w) {
  validate(d);
  StateId s = d.initial;
  for (SymbolId c : w) {
    if (c < 0 || c >= d.alphabet.size())
      throw std::invalid_argument("accepts: symbol index out of range");
    s = d.delta[s][c];
  }
  return d.is_final(s);
}

}  // namespace sclab
