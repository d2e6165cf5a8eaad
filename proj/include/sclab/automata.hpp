#pragma once

// Core value types for complete DFAs and NFAs over small ordered alphabets,
// plus determinization, minimization (Hopcroft partition refinement and
// Brzozowski double reversal as an independent oracle), canonical numbering
// and language equivalence.
//
// All values are immutable after construction; every operation is a pure
// function returning a fresh value.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sclab {

using StateId = int;
using SymbolId = int;

/// A word as a sequence of alphabet symbol indices.
using Word = std::vector<SymbolId>;

/// Sorted, duplicate-free set of state ids.
using StateSet = std::vector<StateId>;

// --- sorted-set helpers -----------------------------------------------------

bool set_contains(const StateSet& s, StateId x);
bool sets_intersect(const StateSet& a, const StateSet& b);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_insert(StateSet s, StateId x);
StateSet set_erase(StateSet s, StateId x);
bool set_includes(const StateSet& outer, const StateSet& inner);
/// Sorts and deduplicates in place, returning the normalized set.
StateSet normalized(StateSet s);

// --- alphabet ---------------------------------------------------------------

/// Ordered sequence of distinct letters. The order is significant: it drives
/// canonical state numbering and all deterministic tie-breaking.
struct Alphabet {
  std::vector<std::string> letters;

  int size() const { return static_cast<int>(letters.size()); }
  std::optional<SymbolId> index_of(std::string_view letter) const;

  bool operator==(const Alphabet&) const = default;

  /// The standard three-letter alphabet {a, b, c}.
  static Alphabet abc();
  /// The first `k` letters of {a, b, c, d}; 1 <= k <= 4.
  static Alphabet first(int k);
};

/// Throws std::invalid_argument on empty or duplicated letters.
void validate(const Alphabet& sigma);

// --- automata ---------------------------------------------------------------

/// Complete deterministic automaton. States are dense ids 0..state_count-1
/// and delta[s][c] is defined for every pair.
struct Dfa {
  Alphabet alphabet;
  int state_count = 0;
  StateId initial = 0;
  StateSet finals;
  std::vector<std::vector<StateId>> delta;  // delta[state][symbol]

  StateId step(StateId s, SymbolId c) const { return delta[s][c]; }
  bool is_final(StateId s) const { return set_contains(finals, s); }

  bool operator==(const Dfa&) const = default;
};

/// Nondeterministic automaton with a set of initial states and no epsilon
/// transitions. `initials` may be empty (the reversal of a DFA without final
/// states has no initial states and accepts the empty language).
struct Nfa {
  Alphabet alphabet;
  int state_count = 0;
  StateSet initials;
  StateSet finals;
  std::vector<std::vector<StateSet>> delta;  // delta[state][symbol] -> targets

  bool is_final(StateId s) const { return set_contains(finals, s); }

  bool operator==(const Nfa&) const = default;
};

/// Validating constructors; throw std::invalid_argument on any broken
/// invariant (ids out of range, non-total DFA delta, bad alphabet).
Dfa make_dfa(Alphabet alphabet, int state_count, StateId initial,
             StateSet finals, std::vector<std::vector<StateId>> delta);
Nfa make_nfa(Alphabet alphabet, int state_count, StateSet initials,
             StateSet finals, std::vector<std::vector<StateSet>> delta);

void validate(const Dfa& d);
void validate(const Nfa& n);

/// 1-state accepting loop: accepts every word.
Dfa sigma_star_dfa(Alphabet alphabet);
/// 1-state rejecting loop: accepts nothing.
Dfa empty_language_dfa(Alphabet alphabet);

/// Reinterpret a DFA as an NFA (singleton initial set, singleton targets).
Nfa as_nfa(const Dfa& d);

// --- determinization --------------------------------------------------------

/// Maps each determinized state id to the set of NFA states it represents.
/// Labels are pairwise distinct; the label of the initial state equals the
/// NFA's initial set.
struct SubsetLabel {
  std::vector<StateSet> subsets;
};

struct DeterminizeResult {
  Dfa dfa;
  SubsetLabel labels;
};

/// Accessible subset construction. The result is complete (the empty subset
/// acts as the sink) and states are numbered in breadth-first discovery
/// order, symbols scanned in alphabet order, so the output is already in
/// canonical form.
DeterminizeResult determinize(const Nfa& n);

// --- minimization and canonical form ----------------------------------------

/// Drops unreachable states and renumbers the rest in breadth-first
/// discovery order from the initial state.
Dfa trim_reachable(const Dfa& d);

/// Minimal complete DFA for L(d): unreachable states removed, equivalent
/// states merged by Hopcroft partition refinement seeded with
/// {finals, non-finals}. The result is in canonical numbering.
Dfa minimize(const Dfa& d);

/// Independent minimization oracle: determinize(reverse(.)) applied twice.
/// Must agree with minimize() on every input.
Dfa minimize_brzozowski(const Dfa& d);

/// Breadth-first renumbering by discovery order from the initial state,
/// symbols visited in alphabet order. Rejects automata with unreachable
/// states. Two minimal DFAs accept the same language iff their canonical
/// forms are identical records.
Dfa canonicalize(const Dfa& d);

// --- equivalence and membership ----------------------------------------------

struct EquivalenceResult {
  bool equivalent = false;
  /// Shortest distinguishing word when not equivalent (ties broken by
  /// alphabet order); empty word = lambda.
  Word counterexample;
};

/// Product-automaton reachability. Requires equal alphabets.
EquivalenceResult check_equivalence(const Dfa& a, const Dfa& b);
bool is_equivalent(const Dfa& a, const Dfa& b);

/// Extended delta from the initial state; symbols must be in range.
bool accepts(const Dfa& d, const Word& w);

}  // namespace sclab
