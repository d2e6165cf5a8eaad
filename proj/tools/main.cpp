// sclab: command-line front end over the C API. Data goes to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 verification failure
// (bound/equivalence/search came back negative), 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sclab.h"

namespace {

struct AutomatonDeleter {
  void operator()(sclab_automaton* a) const { sclab_automaton_free(a); }
};
using Handle = std::unique_ptr<sclab_automaton, AutomatonDeleter>;

struct StringDeleter {
  void operator()(char* s) const { sclab_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(sclab_status status) {
  std::cerr << "error: " << sclab_last_error() << "\n";
  std::exit(2);
  (void)status;
}

void check(sclab_status status) {
  if (status != SCLAB_OK) fail(status);
}

Handle read_automaton(const std::string& path) {
  sclab_automaton* raw = nullptr;
  check(sclab_automaton_read(path.c_str(), &raw));
  return Handle(raw);
}

std::string serialize(const sclab_automaton* a) {
  char* raw = nullptr;
  check(sclab_automaton_serialize(a, &raw));
  CString text(raw);
  return std::string(text.get());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    std::exit(2);
  }
  out << text;
}

// Inclusive range: "2..5" or a single "3".
std::pair<int, int> parse_range(const std::string& text) {
  auto bad = [&]() -> std::pair<int, int> {
    std::cerr << "error: bad range '" << text << "' (use N or LO..HI)\n";
    std::exit(2);
  };
  try {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
      size_t used = 0;
      int v = std::stoi(text, &used);
      if (used != text.size()) return bad();
      return {v, v};
    }
    size_t used = 0;
    int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) return bad();
    std::string hi_text = text.substr(dots + 2);
    int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) return bad();
    return {lo, hi};
  } catch (const std::exception&) {
    return bad();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"state-complexity laboratory for combined operations on regular languages"};
  app.require_subcommand(1);

  // --- min -------------------------------------------------------------------
  std::string min_file, min_out;
  auto* cmd_min = app.add_subcommand("min", "minimize an automaton (canonical form)");
  cmd_min->add_option("file", min_file, "automaton file")->required();
  cmd_min->add_option("--out", min_out, "write result here instead of stdout");

  // --- equiv -----------------------------------------------------------------
  std::string equiv_a, equiv_b;
  auto* cmd_equiv = app.add_subcommand(
      "equiv", "check language equivalence; prints a shortest distinguishing "
               "word and exits 1 when the languages differ");
  cmd_equiv->add_option("first", equiv_a, "automaton file")->required();
  cmd_equiv->add_option("second", equiv_b, "automaton file")->required();

  // --- apply ------------------------------------------------------------------
  std::string apply_op, apply_map, apply_out;
  std::vector<std::string> apply_files;
  auto* cmd_apply = app.add_subcommand("apply", "apply an operation");
  cmd_apply->add_option("--op", apply_op,
                        "cat | star | rev | hom | theta | cat-star | cat-rev")
      ->required();
  cmd_apply->add_option("--map", apply_map,
                        "letter map for hom/theta, e.g. a=b,b=a,c=c");
  cmd_apply->add_option("files", apply_files, "one or two automaton files")
      ->expected(1, 2);
  cmd_apply->add_option("--out", apply_out, "write result here instead of stdout");

  // --- witness ----------------------------------------------------------------
  std::string wit_family, wit_out_a, wit_out_b;
  int wit_m = 0, wit_n = 2;
  auto* cmd_witness =
      app.add_subcommand("witness", "generate a tight witness pair");
  cmd_witness->add_option("--family", wit_family, "cat-star | cat-rev")->required();
  cmd_witness->add_option("--m", wit_m, "states of the first automaton")->required();
  cmd_witness->add_option("--n", wit_n, "states of the second automaton (default 2)");
  cmd_witness->add_option("--out-a", wit_out_a, "write the first automaton here");
  cmd_witness->add_option("--out-b", wit_out_b, "write the second automaton here");

  // --- bound ------------------------------------------------------------------
  std::string bound_op, bound_case = "general";
  int bound_m = 0, bound_n = 0, bound_k1 = -1, bound_k2 = -1;
  auto* cmd_bound = app.add_subcommand(
      "bound", "evaluate a bound formula (tight without --k1/--k2, upper with)");
  cmd_bound->add_option("--op", bound_op, "cat-star | cat-rev")->required();
  cmd_bound->add_option("--m", bound_m)->required();
  cmd_bound->add_option("--n", bound_n)->required();
  cmd_bound->add_option("--k1", bound_k1, "final states of the first automaton");
  cmd_bound->add_option("--k2", bound_k2, "final-state bound parameter of the second");
  cmd_bound->add_option("--case", bound_case, "general | final-is-initial");

  // --- sweep ------------------------------------------------------------------
  std::string sweep_op, sweep_source, sweep_m = "2..4", sweep_n = "2..4";
  std::string sweep_mode = "exhaustive";
  std::uint64_t sweep_seed = 1, sweep_max = 1000000;
  int sweep_count = 100, sweep_alphabet = 3;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "grid verification; TSV to stdout, exit 1 if any cell fails");
  cmd_sweep->add_option("--op", sweep_op, "cat-star | cat-rev")->required();
  cmd_sweep->add_option("--source", sweep_source, "witness | random | search")
      ->required();
  cmd_sweep->add_option("--m", sweep_m, "m range, e.g. 2..4 (default 2..4)");
  cmd_sweep->add_option("--n", sweep_n, "n range, e.g. 2..5 (default 2..4)");
  cmd_sweep->add_option("--seed", sweep_seed, "master seed (default 1)");
  cmd_sweep->add_option("--count", sweep_count, "random source: pairs per cell");
  cmd_sweep->add_option("--alphabet", sweep_alphabet,
                        "search source: alphabet size 1..4");
  cmd_sweep->add_option("--max-candidates", sweep_max,
                        "search source: candidate budget");
  cmd_sweep->add_option("--mode", sweep_mode, "search source: exhaustive | random");

  // --- search -----------------------------------------------------------------
  std::string search_op, search_constraint = "none", search_mode = "exhaustive";
  int search_m = 0, search_n = 0, search_alphabet = 3;
  std::uint64_t search_target = 0, search_max = 1000000, search_seed = 1;
  auto* cmd_search = app.add_subcommand(
      "search", "look for a witness pair; prints it on success, exit 1 when "
                "the space is exhausted without a hit");
  cmd_search->add_option("--op", search_op, "cat-star | cat-rev | cat-phi")
      ->required();
  cmd_search->add_option("--m", search_m)->required();
  cmd_search->add_option("--n", search_n)->required();
  cmd_search->add_option("--target", search_target, "minimal size to reach")
      ->required();
  cmd_search->add_option("--constraint", search_constraint,
                         "none | b-final-initial | first-sigma-star | "
                         "second-sigma-star");
  cmd_search->add_option("--alphabet", search_alphabet, "alphabet size 1..4");
  cmd_search->add_option("--max-candidates", search_max, "candidate budget");
  cmd_search->add_option("--seed", search_seed, "random mode seed");
  cmd_search->add_option("--mode", search_mode, "exhaustive | random");

  // --- dot --------------------------------------------------------------------
  std::string dot_file, dot_out;
  auto* cmd_dot = app.add_subcommand("dot", "emit the DOT graph description");
  cmd_dot->add_option("file", dot_file, "automaton file")->required();
  cmd_dot->add_option("--out", dot_out, "write result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  if (app.got_subcommand(cmd_min)) {
    Handle a = read_automaton(min_file);
    sclab_automaton* raw = nullptr;
    check(sclab_minimize(a.get(), &raw));
    Handle minimal(raw);
    emit(serialize(minimal.get()), min_out);
    return 0;
  }

  if (app.got_subcommand(cmd_equiv)) {
    Handle a = read_automaton(equiv_a);
    Handle b = read_automaton(equiv_b);
    int equivalent = 0;
    char* word_raw = nullptr;
    check(sclab_equivalent(a.get(), b.get(), &equivalent, &word_raw));
    if (equivalent) return 0;
    CString word(word_raw);
    std::cout << (word ? word.get() : "") << "\n";
    return 1;
  }

  if (app.got_subcommand(cmd_apply)) {
    Handle a = read_automaton(apply_files.at(0));
    Handle b;
    if (apply_files.size() == 2) b = read_automaton(apply_files[1]);
    sclab_automaton* raw = nullptr;
    check(sclab_apply(apply_op.c_str(), a.get(), b.get(),
                      apply_map.empty() ? nullptr : apply_map.c_str(), &raw));
    Handle result(raw);
    emit(serialize(result.get()), apply_out);
    return 0;
  }

  if (app.got_subcommand(cmd_witness)) {
    sclab_automaton* raw_a = nullptr;
    sclab_automaton* raw_b = nullptr;
    check(sclab_witness(wit_family.c_str(), wit_m, wit_n, &raw_a, &raw_b));
    Handle a(raw_a), b(raw_b);
    if (wit_out_a.empty() && wit_out_b.empty()) {
      std::cout << serialize(a.get()) << "\n" << serialize(b.get());
      return 0;
    }
    if (!wit_out_a.empty()) emit(serialize(a.get()), wit_out_a);
    if (!wit_out_b.empty()) emit(serialize(b.get()), wit_out_b);
    return 0;
  }

  if (app.got_subcommand(cmd_bound)) {
    if ((bound_k1 < 0) != (bound_k2 < 0)) {
      std::cerr << "error: give both --k1 and --k2, or neither\n";
      return 2;
    }
    std::uint64_t value = 0;
    check(sclab_bound(bound_op.c_str(), bound_m, bound_n, bound_k1, bound_k2,
                      bound_case.c_str(), &value));
    std::cout << value << "\n";
    return 0;
  }

  if (app.got_subcommand(cmd_sweep)) {
    auto [m_lo, m_hi] = parse_range(sweep_m);
    auto [n_lo, n_hi] = parse_range(sweep_n);
    char* tsv_raw = nullptr;
    char* notes_raw = nullptr;
    int all_passed = 0;
    check(sclab_sweep(sweep_op.c_str(), m_lo, m_hi, n_lo, n_hi,
                      sweep_source.c_str(), sweep_seed, sweep_count,
                      sweep_alphabet, sweep_max, sweep_mode.c_str(), &tsv_raw,
                      &all_passed, &notes_raw));
    CString tsv(tsv_raw), notes(notes_raw);
    std::cout << tsv.get();
    if (notes && notes.get()[0] != '\0') std::cerr << notes.get();
    return all_passed ? 0 : 1;
  }

  if (app.got_subcommand(cmd_search)) {
    char* report_raw = nullptr;
    int found = 0;
    sclab_automaton* raw_a = nullptr;
    sclab_automaton* raw_b = nullptr;
    check(sclab_search(search_op.c_str(), search_m, search_n, search_target,
                       search_constraint.c_str(), search_alphabet, search_max,
                       search_seed, search_mode.c_str(), &report_raw, &found,
                       &raw_a, &raw_b));
    CString report(report_raw);
    Handle a(raw_a), b(raw_b);
    std::cerr << report.get() << "\n";
    if (!found) return 1;
    std::cout << serialize(a.get()) << "\n" << serialize(b.get());
    return 0;
  }

  if (app.got_subcommand(cmd_dot)) {
    Handle a = read_automaton(dot_file);
    char* raw = nullptr;
    check(sclab_automaton_to_dot(a.get(), &raw));
    CString dot(raw);
    emit(dot.get(), dot_out);
    return 0;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
