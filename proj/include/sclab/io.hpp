#pragma once

// Line-oriented automaton text format, canonical serialization, DOT export
// and small parsing helpers shared by the C API and the command line.
//
// Format (UTF-8, '#' starts a comment, blank lines ignored):
//
//   type: dfa            # or nfa
//   alphabet: a b c
//   states: 4            # ids are 0..3
//   initial: 0           # nfa: space-separated list (may be empty)
//   final: 3             # space-separated list; may be empty
//   trans: 0 a 1         # one per line; dfa: exactly one per (state, symbol)
//
// Serialization is canonical: fields in the order above, lists sorted,
// transitions sorted by (state, symbol); equal values produce byte-identical
// files and parse(serialize(x)) == x.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "sclab/automata.hpp"
#include "sclab/rational.hpp"

namespace sclab {

struct ParseError : std::runtime_error {
  int line;  // 1-based line number, 0 when not tied to a line

  ParseError(int line_number, const std::string& message)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
};

using Automaton = std::variant<Dfa, Nfa>;

Automaton parse_automaton(std::string_view text);
Automaton read_automaton_file(const std::string& path);

std::string serialize(const Dfa& d);
std::string serialize(const Nfa& n);
std::string serialize(const Automaton& a);

/// DOT export: circles for states, double circles for finals, a detached
/// arrow into each initial state; parallel edges merge their letters.
std::string to_dot(const Dfa& d);
std::string to_dot(const Nfa& n);
std::string to_dot(const Automaton& a);

/// Parses "a=b,b=a,c=c". Every alphabet letter must appear exactly once on
/// the left; images must be alphabet letters. Throws ParseError.
LetterMap parse_letter_map(const Alphabet& sigma, std::string_view text);

/// Renders a word over the alphabet: letters joined without separators when
/// all are single characters, space-separated otherwise; lambda renders
/// empty. parse_word is the inverse for both renderings.
std::string render_word(const Alphabet& sigma, const Word& w);
Word parse_word(const Alphabet& sigma, std::string_view text);

}  // namespace sclab
