#include "sclab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "sclab/combined.hpp"
#include "sclab/io.hpp"
#include "sclab/verify.hpp"
#include "sclab/witness.hpp"

struct sclab_automaton {
  sclab::Automaton value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sclab_automaton* wrap(sclab::Automaton a) {
  return new sclab_automaton{std::move(a)};
}

const sclab::Dfa* as_dfa(const sclab_automaton* a) {
  return std::get_if<sclab::Dfa>(&a->value);
}

// Every operation works on complete DFAs; NFA handles determinize on entry.
sclab::Dfa to_dfa(const sclab_automaton* a) {
  if (const sclab::Dfa* d = as_dfa(a)) return *d;
  return sclab::determinize(std::get<sclab::Nfa>(a->value)).dfa;
}

template <typename Fn>
sclab_status guarded(Fn&& fn) {
  try {
    fn();
    return SCLAB_OK;
  } catch (const sclab::ParseError& e) {
    g_last_error = e.what();
    return SCLAB_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SCLAB_ERR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SCLAB_ERR_INVALID;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return SCLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCLAB_ERR_IO;
  }
}

sclab_status require(bool ok, const char* message) {
  if (ok) return SCLAB_OK;
  g_last_error = message;
  return SCLAB_ERR_INVALID;
}

}  // namespace

const char* sclab_last_error(void) { return g_last_error.c_str(); }

void sclab_string_free(char* s) { std::free(s); }

void sclab_automaton_free(sclab_automaton* a) { delete a; }

sclab_status sclab_automaton_parse(const char* text, sclab_automaton** out) {
  if (auto st = require(text && out, "parse: null argument")) return st;
  return guarded([&] { *out = wrap(sclab::parse_automaton(text)); });
}

sclab_status sclab_automaton_read(const char* path, sclab_automaton** out) {
  if (auto st = require(path && out, "read: null argument")) return st;
  return guarded([&] { *out = wrap(sclab::read_automaton_file(path)); });
}

sclab_status sclab_automaton_serialize(const sclab_automaton* a, char** out) {
  if (auto st = require(a && out, "serialize: null argument")) return st;
  return guarded([&] { *out = dup_string(sclab::serialize(a->value)); });
}

sclab_status sclab_automaton_to_dot(const sclab_automaton* a, char** out) {
  if (auto st = require(a && out, "to_dot: null argument")) return st;
  return guarded([&] { *out = dup_string(sclab::to_dot(a->value)); });
}

int sclab_automaton_is_dfa(const sclab_automaton* a) {
  return a && as_dfa(a) ? 1 : 0;
}

int sclab_automaton_state_count(const sclab_automaton* a) {
  if (!a) return 0;
  return std::visit([](const auto& x) { return x.state_count; }, a->value);
}

sclab_status sclab_automaton_accepts(const sclab_automaton* a, const char* word,
                                     int* out) {
  if (auto st = require(a && word && out, "accepts: null argument")) return st;
  return guarded([&] {
    sclab::Dfa d = to_dfa(a);
    *out = sclab::accepts(d, sclab::parse_word(d.alphabet, word)) ? 1 : 0;
  });
}

sclab_status sclab_minimize(const sclab_automaton* a, sclab_automaton** out) {
  if (auto st = require(a && out, "minimize: null argument")) return st;
  return guarded([&] { *out = wrap(sclab::minimize(to_dfa(a))); });
}

sclab_status sclab_equivalent(const sclab_automaton* a, const sclab_automaton* b,
                              int* equivalent, char** counterexample) {
  if (auto st = require(a && b && equivalent, "equivalent: null argument"))
    return st;
  return guarded([&] {
    sclab::Dfa da = to_dfa(a);
    sclab::Dfa db = to_dfa(b);
    sclab::EquivalenceResult r = sclab::check_equivalence(da, db);
    *equivalent = r.equivalent ? 1 : 0;
    if (!r.equivalent && counterexample)
      *counterexample =
          dup_string(sclab::render_word(da.alphabet, r.counterexample));
  });
}

sclab_status sclab_apply(const char* op, const sclab_automaton* a,
                         const sclab_automaton* b, const char* map,
                         sclab_automaton** out) {
  if (auto st = require(op && a && out, "apply: null argument")) return st;
  return guarded([&] {
    std::string name = op;
    bool binary = name == "cat" || name == "cat-star" || name == "cat-rev";
    if (binary && !b)
      throw std::invalid_argument("apply: '" + name + "' needs two automata");
    if (!binary && b)
      throw std::invalid_argument("apply: '" + name + "' takes one automaton");
    bool mapped = name == "hom" || name == "theta";
    if (mapped && !map)
      throw std::invalid_argument("apply: '" + name + "' needs --map");
    if (!mapped && map)
      throw std::invalid_argument("apply: '" + name + "' does not take --map");

    sclab::Dfa da = to_dfa(a);
    if (name == "cat") {
      *out = wrap(sclab::catenate_nfa(da, to_dfa(b)));
    } else if (name == "star") {
      *out = wrap(sclab::star_nfa(da));
    } else if (name == "rev") {
      *out = wrap(sclab::reverse_nfa(da));
    } else if (name == "hom") {
      *out = wrap(
          sclab::map_letters(da, sclab::parse_letter_map(da.alphabet, map)));
    } else if (name == "theta") {
      *out = wrap(sclab::antimorphic_involution(
          da, sclab::parse_letter_map(da.alphabet, map)));
    } else if (name == "cat-star") {
      *out = wrap(sclab::cat_star_minimal(da, to_dfa(b)));
    } else if (name == "cat-rev") {
      *out = wrap(sclab::cat_rev_minimal(da, to_dfa(b)));
    } else {
      throw std::invalid_argument("apply: unknown op '" + name + "'");
    }
  });
}

sclab_status sclab_bound(const char* op, int m, int n, int k1, int k2,
                         const char* star_case, uint64_t* out) {
  if (auto st = require(op && out, "bound: null argument")) return st;
  return guarded([&] {
    std::string name = op;
    bool tight = k1 < 0 && k2 < 0;
    if (!tight && (k1 < 0 || k2 < 0))
      throw std::invalid_argument("bound: give both k1 and k2, or neither");
    if (name == "cat-star") {
      if (tight) {
        std::string which = star_case ? star_case : "general";
        sclab::StarCase sc;
        if (which == "general")
          sc = sclab::StarCase::general;
        else if (which == "final-is-initial")
          sc = sclab::StarCase::final_is_initial;
        else
          throw std::invalid_argument("bound: unknown case '" + which + "'");
        *out = sclab::tight_bound_cat_star(m, n, sc);
      } else {
        *out = sclab::upper_bound_cat_star(sclab::BoundQuery{m, n, k1, k2});
      }
    } else if (name == "cat-rev") {
      *out = tight ? sclab::tight_bound_cat_rev(m, n)
                   : sclab::upper_bound_cat_rev(sclab::BoundQuery{m, n, k1, k2});
    } else {
      throw std::invalid_argument("bound: unknown op '" + name + "'");
    }
  });
}

sclab_status sclab_witness(const char* family, int m, int n,
                           sclab_automaton** out_a, sclab_automaton** out_b) {
  if (auto st = require(family && out_a && out_b, "witness: null argument"))
    return st;
  return guarded([&] {
    std::string name = family;
    sclab::WitnessPair w = [&] {
      if (name == "cat-star") {
        if (n != 2)
          throw std::invalid_argument(
              "witness: the cat-star family is defined for n = 2");
        return sclab::gen_cat_star_witness(m);
      }
      if (name == "cat-rev") return sclab::gen_cat_rev_witness(m, n);
      throw std::invalid_argument("witness: unknown family '" + name + "'");
    }();
    *out_a = wrap(std::move(w.a));
    *out_b = wrap(std::move(w.b));
  });
}

namespace {

sclab::SearchMode parse_mode(const char* mode) {
  std::string name = mode ? mode : "exhaustive";
  if (name == "exhaustive") return sclab::SearchMode::exhaustive;
  if (name == "random") return sclab::SearchMode::random;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

}  // namespace

sclab_status sclab_sweep(const char* op, int m_lo, int m_hi, int n_lo, int n_hi,
                         const char* source, uint64_t seed, int count,
                         int alphabet_size, uint64_t max_candidates,
                         const char* mode, char** tsv, int* all_passed,
                         char** notes) {
  if (auto st = require(op && source && tsv && all_passed, "sweep: null argument"))
    return st;
  return guarded([&] {
    sclab::SweepSpec spec;
    std::string name = op;
    if (name == "cat-star")
      spec.op = sclab::CombinedOp::cat_star;
    else if (name == "cat-rev")
      spec.op = sclab::CombinedOp::cat_rev;
    else
      throw std::invalid_argument("sweep: unknown op '" + name + "'");
    spec.m_lo = m_lo;
    spec.m_hi = m_hi;
    spec.n_lo = n_lo;
    spec.n_hi = n_hi;
    std::string src = source;
    if (src == "witness")
      spec.source = sclab::SweepSource::witness_family;
    else if (src == "random")
      spec.source = sclab::SweepSource::random_pairs;
    else if (src == "search")
      spec.source = sclab::SweepSource::search;
    else
      throw std::invalid_argument("sweep: unknown source '" + src + "'");
    spec.seed = seed;
    spec.count = count;
    spec.budget.alphabet_size = alphabet_size;
    spec.budget.max_candidates = max_candidates;
    spec.budget.seed = seed;
    spec.budget.mode = parse_mode(mode);

    std::vector<sclab::VerifyReport> rows = sclab::sweep(spec);
    std::string text = sclab::tsv_header();
    text += '\n';
    std::string skip_notes;
    bool ok = true;
    for (const auto& row : rows) {
      text += sclab::tsv_row(row);
      text += '\n';
      ok = ok && sclab::report_passes(spec.source, row);
      if (row.skipped) {
        skip_notes += "skip m=" + std::to_string(row.m) +
                      " n=" + std::to_string(row.n) + ": " + row.skip_reason;
        skip_notes += '\n';
      }
    }
    *tsv = dup_string(text);
    *all_passed = ok ? 1 : 0;
    if (notes) *notes = dup_string(skip_notes);
  });
}

sclab_status sclab_search(const char* op, int m, int n, uint64_t target,
                          const char* constraint, int alphabet_size,
                          uint64_t max_candidates, uint64_t seed,
                          const char* mode, char** report, int* found,
                          sclab_automaton** out_a, sclab_automaton** out_b) {
  if (auto st = require(op && report && found, "search: null argument"))
    return st;
  return guarded([&] {
    std::string name = op;
    sclab::SearchOp sop;
    if (name == "cat-star")
      sop = sclab::SearchOp::cat_star;
    else if (name == "cat-rev")
      sop = sclab::SearchOp::cat_rev;
    else if (name == "cat-phi")
      sop = sclab::SearchOp::cat_phi;
    else
      throw std::invalid_argument("search: unknown op '" + name + "'");

    std::string cname = constraint ? constraint : "none";
    sclab::SearchConstraint sc;
    if (cname == "none")
      sc = sclab::SearchConstraint::none;
    else if (cname == "b-final-initial")
      sc = sclab::SearchConstraint::b_finals_initial_only;
    else if (cname == "first-sigma-star")
      sc = sclab::SearchConstraint::first_sigma_star;
    else if (cname == "second-sigma-star")
      sc = sclab::SearchConstraint::second_sigma_star;
    else
      throw std::invalid_argument("search: unknown constraint '" + cname + "'");

    sclab::SearchBudget budget;
    budget.alphabet_size = alphabet_size;
    budget.max_candidates = max_candidates;
    budget.seed = seed;
    budget.mode = parse_mode(mode);

    sclab::SearchResult r = sclab::search_witness(sop, m, n, target, sc, budget);
    std::string text = r.certificate.describe();
    text += "\nbest_size=" + std::to_string(r.best_size);
    *report = dup_string(text);
    *found = r.witness ? 1 : 0;
    if (r.witness && out_a && out_b) {
      *out_a = wrap(r.witness->a);
      *out_b = wrap(r.witness->b);
    }
  });
}
