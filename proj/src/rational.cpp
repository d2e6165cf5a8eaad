#include "sclab/rational.hpp"

#include <algorithm>

namespace sclab {

bool LetterMap::bijective() const {
  std::vector<char> hit(image.size(), 0);
  for (SymbolId c : image) {
    if (c < 0 || c >= static_cast<SymbolId>(image.size()) ||
        hit[static_cast<size_t>(c)])
      return false;
    hit[static_cast<size_t>(c)] = 1;
  }
  return true;
}

LetterMap make_letter_map(const Alphabet& sigma, std::vector<SymbolId> image) {
  validate(sigma);
  if (static_cast<int>(image.size()) != sigma.size())
    throw std::invalid_argument("letter map: must be total over the alphabet");
  for (SymbolId c : image)
    if (c < 0 || c >= sigma.size())
      throw std::invalid_argument("letter map: image symbol out of range");
  LetterMap f{std::move(image), false};
  f.involutive = true;
  for (size_t i = 0; i < f.image.size(); ++i)
    if (f.image[static_cast<size_t>(f.image[i])] != static_cast<SymbolId>(i))
      f.involutive = false;
  return f;
}

LetterMap identity_map(const Alphabet& sigma) {
  std::vector<SymbolId> image(static_cast<size_t>(sigma.size()));
  for (int i = 0; i < sigma.size(); ++i) image[static_cast<size_t>(i)] = i;
  return make_letter_map(sigma, std::move(image));
}

LetterMap pairwise_swap_map(const Alphabet& sigma) {
  std::vector<SymbolId> image(static_cast<size_t>(sigma.size()));
  for (int i = 0; i + 1 < sigma.size(); i += 2) {
    image[static_cast<size_t>(i)] = i + 1;
    image[static_cast<size_t>(i) + 1] = i;
  }
  if (sigma.size() % 2 == 1)
    image[static_cast<size_t>(sigma.size()) - 1] = sigma.size() - 1;
  return make_letter_map(sigma, std::move(image));
}

Nfa catenate_nfa(const Dfa& a, const Dfa& b) {
  validate(a);
  validate(b);
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("catenate_nfa: alphabets differ");

  const int m = a.state_count;
  const int nsym = a.alphabet.size();
  Nfa out;
  out.alphabet = a.alphabet;
  out.state_count = m + b.state_count;
  out.initials = {a.initial};
  if (a.is_final(a.initial)) out.initials = set_insert(out.initials, m + b.initial);
  for (StateId f : b.finals) out.finals.push_back(m + f);

  out.delta.resize(static_cast<size_t>(out.state_count));
  for (StateId p = 0; p < m; ++p) {
    out.delta[static_cast<size_t>(p)].resize(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c) {
      StateId t = a.delta[p][c];
      StateSet targets{t};
      if (a.is_final(t)) targets = set_insert(targets, m + b.initial);
      out.delta[static_cast<size_t>(p)][static_cast<size_t>(c)] =
          std::move(targets);
    }
  }
  for (StateId p = 0; p < b.state_count; ++p) {
    out.delta[static_cast<size_t>(m + p)].resize(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c)
      out.delta[static_cast<size_t>(m + p)][static_cast<size_t>(c)] = {
          m + b.delta[p][c]};
  }
  validate(out);
  return out;
}

Nfa star_nfa(const Dfa& b) {
  validate(b);
  const int n = b.state_count;
  const int nsym = b.alphabet.size();
  const StateId s2p = n;  // fresh initial-and-final state

  Nfa out;
  out.alphabet = b.alphabet;
  out.state_count = n + 1;
  out.initials = {s2p};
  out.finals = set_insert(b.finals, s2p);

  auto targets_for = [&](StateId from_row, int c) {
    StateId t = b.delta[from_row][c];
    StateSet targets{t};
    // Completing a segment: re-enter the original initial state.
    if (b.is_final(t)) targets = set_insert(targets, b.initial);
    return targets;
  };

  out.delta.resize(static_cast<size_t>(n) + 1);
  for (StateId p = 0; p < n; ++p) {
    out.delta[static_cast<size_t>(p)].resize(static_cast<size_t>(nsym));
    for (int c = 0; c < nsym; ++c)
      out.delta[static_cast<size_t>(p)][static_cast<size_t>(c)] =
          targets_for(p, c);
  }
  out.delta[static_cast<size_t>(s2p)].resize(static_cast<size_t>(nsym));
  for (int c = 0; c < nsym; ++c)
    out.delta[static_cast<size_t>(s2p)][static_cast<size_t>(c)] =
        targets_for(b.initial, c);
  validate(out);
  return out;
}

Nfa reverse_nfa(const Dfa& d) {
  validate(d);
  const int nsym = d.alphabet.size();
  Nfa out;
  out.alphabet = d.alphabet;
  out.state_count = d.state_count;
  out.initials = d.finals;
  out.finals = {d.initial};
  out.delta.assign(static_cast<size_t>(d.state_count),
                   std::vector<StateSet>(static_cast<size_t>(nsym)));
  // Sources are visited in ascending order, so each target list stays sorted.
  for (StateId p = 0; p < d.state_count; ++p)
    for (int c = 0; c < nsym; ++c)
      out.delta[static_cast<size_t>(d.delta[p][c])][static_cast<size_t>(c)]
          .push_back(p);
  validate(out);
  return out;
}

Dfa map_letters(const Dfa& d, const LetterMap& f) {
  validate(d);
  if (static_cast<int>(f.image.size()) != d.alphabet.size())
    throw std::invalid_argument("map_letters: map is over a different alphabet");
  if (!f.bijective())
    throw std::invalid_argument("map_letters: map must be bijective");
  Dfa out = d;
  for (StateId s = 0; s < d.state_count; ++s)
    for (int c = 0; c < d.alphabet.size(); ++c)
      out.delta[static_cast<size_t>(s)][static_cast<size_t>(f(c))] =
          d.delta[s][c];
  return out;
}

Nfa map_letters(const Nfa& n, const LetterMap& f) {
  validate(n);
  if (static_cast<int>(f.image.size()) != n.alphabet.size())
    throw std::invalid_argument("map_letters: map is over a different alphabet");
  if (!f.bijective())
    throw std::invalid_argument("map_letters: map must be bijective");
  Nfa out = n;
  for (StateId s = 0; s < n.state_count; ++s)
    for (int c = 0; c < n.alphabet.size(); ++c)
      out.delta[static_cast<size_t>(s)][static_cast<size_t>(f(c))] =
          n.delta[s][c];
  return out;
}

Nfa antimorphic_involution(const Dfa& d, const LetterMap& f) {
  if (!f.involutive)
    throw std::invalid_argument("antimorphic_involution: map must be involutive");
  return map_letters(reverse_nfa(d), f);
}

}  // namespace sclab
