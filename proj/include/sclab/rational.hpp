#pragma once

// Epsilon-free rational operations: catenation, star, reversal, bijective
// letter mappings and the antimorphic involution theta(L) = phi(L^R).
//
// The NFA-producing constructions deliberately mirror the shapes whose
// determinizations realize the combined-operation upper bounds: star adds a
// fresh initial-and-final state s2' and re-enters the original initial state
// whenever a transition enters a final state; catenation enters the second
// automaton's initial state alongside every transition into a final state of
// the first.

#include "sclab/automata.hpp"

namespace sclab {

/// Total letter-to-letter mapping over one alphabet. `involutive` is
/// computed at construction: f(f(x)) == x for every letter.
struct LetterMap {
  std::vector<SymbolId> image;  // image[symbol] = mapped symbol
  bool involutive = false;

  bool bijective() const;
  SymbolId operator()(SymbolId c) const {
    return image[static_cast<size_t>(c)];
  }

  bool operator==(const LetterMap&) const = default;
};

/// Validates totality and range; computes the involutive flag.
LetterMap make_letter_map(const Alphabet& sigma, std::vector<SymbolId> image);
/// Identity mapping (involutive and bijective).
LetterMap identity_map(const Alphabet& sigma);
/// The fixed involution used for searched theta-variants: adjacent letters
/// swapped pairwise (a<->b, c<->d), an unpaired last letter fixed.
LetterMap pairwise_swap_map(const Alphabet& sigma);

/// L(a) . L(b). States: a's states, then b's shifted by a.state_count.
/// Every transition entering a final state of `a` also enters b's initial;
/// b's initial joins the initial set iff a's initial is final. Requires equal
/// alphabets.
Nfa catenate_nfa(const Dfa& a, const Dfa& b);

/// L(b)*. Adds the fresh initial-and-final state s2' = b.state_count, which
/// mirrors the outgoing row of b's initial state; every transition entering
/// a final state of b additionally re-enters b's initial state. The original
/// initial state is not made final.
Nfa star_nfa(const Dfa& b);

/// L(d)^R. Same state set, all transitions flipped, initials = d.finals
/// (possibly empty), finals = {d.initial}.
Nfa reverse_nfa(const Dfa& d);

/// Letter-to-letter relabeling phi(L). Requires a bijective map: images and
/// preimages stay deterministic.
Dfa map_letters(const Dfa& d, const LetterMap& f);
Nfa map_letters(const Nfa& n, const LetterMap& f);

/// theta(L) = phi(L^R) for an involutive (hence bijective) phi. Equals
/// (phi(L))^R for the same phi.
Nfa antimorphic_involution(const Dfa& d, const LetterMap& f);

}  // namespace sclab
