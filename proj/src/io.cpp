#include "sclab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace sclab {

namespace {

std::string_view trimmed(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  bool any = false;
  for (char ch : tok) {
    if (ch < '0' || ch > '9')
      throw ParseError(line, std::string(what) + ": expected a number, got '" +
                                 std::string(tok) + "'");
    if (value > 214748363)
      throw ParseError(line, std::string(what) + ": number too large");
    value = value * 10 + (ch - '0');
    any = true;
  }
  if (!any)
    throw ParseError(line, std::string(what) + ": expected a number");
  return value;
}

struct RawLine {
  int number;
  std::string key;
  std::string value;
};

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::vector<RawLine> lines;
  {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t nl = text.find('\n', pos);
      std::string_view raw = text.substr(
          pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++number;
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

      if (size_t hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      raw = trimmed(raw);
      if (raw.empty()) continue;

      size_t colon = raw.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(number, "expected 'key: value'");
      std::string key{trimmed(raw.substr(0, colon))};
      std::string value{trimmed(raw.substr(colon + 1))};
      lines.push_back(RawLine{number, std::move(key), std::move(value)});
    }
  }
  if (lines.empty()) throw ParseError(0, "empty automaton description");

  auto unique_line = [&](const std::string& key) -> const RawLine* {
    const RawLine* found = nullptr;
    for (const auto& l : lines)
      if (l.key == key) {
        if (found)
          throw ParseError(l.number, "duplicate '" + key + "' line");
        found = &l;
      }
    return found;
  };
  auto require_line = [&](const std::string& key) -> const RawLine& {
    const RawLine* l = unique_line(key);
    if (!l) throw ParseError(0, "missing '" + key + "' line");
    return *l;
  };

  const RawLine& type_line = require_line("type");
  bool is_dfa = type_line.value == "dfa";
  if (!is_dfa && type_line.value != "nfa")
    throw ParseError(type_line.number, "type must be 'dfa' or 'nfa'");

  const RawLine& alphabet_line = require_line("alphabet");
  Alphabet sigma{split_ws(alphabet_line.value)};
  try {
    validate(sigma);
  } catch (const std::invalid_argument& e) {
    throw ParseError(alphabet_line.number, e.what());
  }

  const RawLine& states_line = require_line("states");
  int states = parse_int(states_line.value, states_line.number, "states");
  if (states < 1)
    throw ParseError(states_line.number, "states: needs at least one state");

  auto parse_state_list = [&](const RawLine& l) {
    StateSet out;
    for (const auto& tok : split_ws(l.value)) {
      int s = parse_int(tok, l.number, l.key.c_str());
      if (s >= states)
        throw ParseError(l.number,
                         l.key + ": state id " + tok + " out of range");
      out.push_back(s);
    }
    return normalized(std::move(out));
  };

  const RawLine& initial_line = require_line("initial");
  StateSet initials = parse_state_list(initial_line);
  const RawLine& final_line = require_line("final");
  StateSet finals = parse_state_list(final_line);

  if (is_dfa && initials.size() != 1)
    throw ParseError(initial_line.number, "dfa: exactly one initial state");

  struct Edge {
    int line;
    StateId from;
    SymbolId symbol;
    StateId to;
  };
  std::vector<Edge> edges;
  for (const auto& l : lines) {
    if (l.key == "type" || l.key == "alphabet" || l.key == "states" ||
        l.key == "initial" || l.key == "final")
      continue;
    if (l.key != "trans")
      throw ParseError(l.number, "unknown key '" + l.key + "'");
    auto toks = split_ws(l.value);
    if (toks.size() != 3)
      throw ParseError(l.number, "trans: expected 'state letter state'");
    int from = parse_int(toks[0], l.number, "trans");
    auto symbol = sigma.index_of(toks[1]);
    if (!symbol)
      throw ParseError(l.number, "trans: unknown letter '" + toks[1] + "'");
    int to = parse_int(toks[2], l.number, "trans");
    if (from >= states || to >= states)
      throw ParseError(l.number, "trans: state id out of range");
    edges.push_back(Edge{l.number, from, *symbol, to});
  }

  if (is_dfa) {
    std::vector<std::vector<StateId>> delta(
        static_cast<size_t>(states),
        std::vector<StateId>(static_cast<size_t>(sigma.size()), -1));
    for (const auto& e : edges) {
      StateId& cell = delta[static_cast<size_t>(e.from)][static_cast<size_t>(e.symbol)];
      if (cell != -1)
        throw ParseError(e.line, "dfa: duplicate transition for (" +
                                     std::to_string(e.from) + ", " +
                                     sigma.letters[static_cast<size_t>(e.symbol)] +
                                     ")");
      cell = e.to;
    }
    for (int s = 0; s < states; ++s)
      for (int c = 0; c < sigma.size(); ++c)
        if (delta[static_cast<size_t>(s)][static_cast<size_t>(c)] == -1)
          throw ParseError(0, "dfa: missing transition for (" +
                                  std::to_string(s) + ", " +
                                  sigma.letters[static_cast<size_t>(c)] + ")");
    return make_dfa(std::move(sigma), states, initials[0], std::move(finals),
                    std::move(delta));
  }

  std::vector<std::vector<StateSet>> delta(
      static_cast<size_t>(states),
      std::vector<StateSet>(static_cast<size_t>(sigma.size())));
  for (const auto& e : edges)
    delta[static_cast<size_t>(e.from)][static_cast<size_t>(e.symbol)] = set_insert(
        std::move(delta[static_cast<size_t>(e.from)][static_cast<size_t>(e.symbol)]),
        e.to);
  return make_nfa(std::move(sigma), states, std::move(initials),
                  std::move(finals), std::move(delta));
}

Automaton read_automaton_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

namespace {

void append_header(std::string& out, const char* type, const Alphabet& sigma,
                   int states, const StateSet& initials, const StateSet& finals) {
  out += "type: ";
  out += type;
  out += "\nalphabet:";
  for (const auto& l : sigma.letters) {
    out += ' ';
    out += l;
  }
  out += "\nstates: ";
  out += std::to_string(states);
  out += "\ninitial:";
  for (StateId s : initials) {
    out += ' ';
    out += std::to_string(s);
  }
  out += "\nfinal:";
  for (StateId s : finals) {
    out += ' ';
    out += std::to_string(s);
  }
  out += '\n';
}

void append_edge(std::string& out, const Alphabet& sigma, StateId from,
                 SymbolId c, StateId to) {
  out += "trans: ";
  out += std::to_string(from);
  out += ' ';
  out += sigma.letters[static_cast<size_t>(c)];
  out += ' ';
  out += std::to_string(to);
  out += '\n';
}

}  // namespace

std::string serialize(const Dfa& d) {
  validate(d);
  std::string out;
  append_header(out, "dfa", d.alphabet, d.state_count, {d.initial}, d.finals);
  for (StateId s = 0; s < d.state_count; ++s)
    for (int c = 0; c < d.alphabet.size(); ++c)
      append_edge(out, d.alphabet, s, c, d.delta[s][c]);
  return out;
}

std::string serialize(const Nfa& n) {
  validate(n);
  std::string out;
  append_header(out, "nfa", n.alphabet, n.state_count, n.initials, n.finals);
  for (StateId s = 0; s < n.state_count; ++s)
    for (int c = 0; c < n.alphabet.size(); ++c)
      for (StateId t : n.delta[s][c]) append_edge(out, n.alphabet, s, c, t);
  return out;
}

std::string serialize(const Automaton& a) {
  return std::visit([](const auto& x) { return serialize(x); }, a);
}

// --- DOT ------------------------------------------------------------------------

namespace {

std::string to_dot_impl(const Alphabet& sigma, int states,
                        const StateSet& initials, const StateSet& finals,
                        const std::map<std::pair<StateId, StateId>,
                                       std::vector<SymbolId>>& edges) {
  std::string out = "digraph automaton {\n  rankdir=LR;\n";
  out += "  node [shape=circle];\n";
  for (StateId f : finals)
    out += "  " + std::to_string(f) + " [shape=doublecircle];\n";
  for (size_t i = 0; i < initials.size(); ++i) {
    std::string ghost = "__start" + std::to_string(i);
    out += "  " + ghost + " [shape=none, label=\"\"];\n";
    out += "  " + ghost + " -> " + std::to_string(initials[i]) + ";\n";
  }
  // Isolated plain states would otherwise vanish from the graph.
  for (StateId s = 0; s < states; ++s) {
    if (set_contains(finals, s) || set_contains(initials, s)) continue;
    bool mentioned = false;
    for (const auto& [key, symbols] : edges)
      if (key.first == s || key.second == s) {
        mentioned = true;
        break;
      }
    if (!mentioned) out += "  " + std::to_string(s) + ";\n";
  }
  for (const auto& [key, symbols] : edges) {
    std::string label;
    for (size_t i = 0; i < symbols.size(); ++i) {
      if (i) label += ", ";
      label += sigma.letters[static_cast<size_t>(symbols[i])];
    }
    out += "  " + std::to_string(key.first) + " -> " +
           std::to_string(key.second) + " [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string to_dot(const Dfa& d) {
  validate(d);
  std::map<std::pair<StateId, StateId>, std::vector<SymbolId>> edges;
  for (StateId s = 0; s < d.state_count; ++s)
    for (int c = 0; c < d.alphabet.size(); ++c)
      edges[{s, d.delta[s][c]}].push_back(c);
  return to_dot_impl(d.alphabet, d.state_count, {d.initial}, d.finals, edges);
}

std::string to_dot(const Nfa& n) {
  validate(n);
  std::map<std::pair<StateId, StateId>, std::vector<SymbolId>> edges;
  for (StateId s = 0; s < n.state_count; ++s)
    for (int c = 0; c < n.alphabet.size(); ++c)
      for (StateId t : n.delta[s][c]) edges[{s, t}].push_back(c);
  return to_dot_impl(n.alphabet, n.state_count, n.initials, n.finals, edges);
}

std::string to_dot(const Automaton& a) {
  return std::visit([](const auto& x) { return to_dot(x); }, a);
}

// --- letter maps and words --------------------------------------------------------

LetterMap parse_letter_map(const Alphabet& sigma, std::string_view text) {
  validate(sigma);
  std::vector<SymbolId> image(static_cast<size_t>(sigma.size()), -1);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    item = trimmed(item);
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(0, "letter map: expected 'x=y' in '" + std::string(item) + "'");
    auto lhs = sigma.index_of(trimmed(item.substr(0, eq)));
    auto rhs = sigma.index_of(trimmed(item.substr(eq + 1)));
    if (!lhs || !rhs)
      throw ParseError(0, "letter map: unknown letter in '" + std::string(item) + "'");
    if (image[static_cast<size_t>(*lhs)] != -1)
      throw ParseError(0, "letter map: letter '" +
                              sigma.letters[static_cast<size_t>(*lhs)] +
                              "' mapped twice");
    image[static_cast<size_t>(*lhs)] = *rhs;
  }
  for (int c = 0; c < sigma.size(); ++c)
    if (image[static_cast<size_t>(c)] == -1)
      throw ParseError(0, "letter map: letter '" +
                              sigma.letters[static_cast<size_t>(c)] +
                              "' has no image");
  return make_letter_map(sigma, std::move(image));
}

std::string render_word(const Alphabet& sigma, const Word& w) {
  bool compact = true;
  for (const auto& l : sigma.letters)
    if (l.size() != 1) compact = false;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ' ';
    out += sigma.letters[static_cast<size_t>(w[i])];
  }
  return out;
}

Word parse_word(const Alphabet& sigma, std::string_view text) {
  text = trimmed(text);
  Word w;
  if (text.find(' ') != std::string_view::npos ||
      text.find('\t') != std::string_view::npos) {
    for (const auto& tok : split_ws(text)) {
      auto c = sigma.index_of(tok);
      if (!c) throw ParseError(0, "word: unknown letter '" + tok + "'");
      w.push_back(*c);
    }
    return w;
  }
  // No separators: greedy longest-letter match, which is plain per-character
  // splitting for single-character alphabets.
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (int c = 0; c < sigma.size(); ++c) {
      const auto& l = sigma.letters[static_cast<size_t>(c)];
      if (l.size() > best_len && text.compare(pos, l.size(), l) == 0) {
        best = c;
        best_len = l.size();
      }
    }
    if (best < 0)
      throw ParseError(0, "word: cannot match a letter at '" +
                              std::string(text.substr(pos)) + "'");
    w.push_back(best);
    pos += best_len;
  }
  return w;
}

}  // namespace sclab
