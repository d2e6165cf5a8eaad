#pragma once

// Random-instance corpus generation, per-pair verification reports, and
// (m, n) grid sweeps confronting measured minimal sizes with the closed-form
// bounds.
//
// Every report is produced by running two independent routes and comparing
// them: the direct combined-operation construction, and the naive oracle
// that composes the rational operations and then determinizes and minimizes.
// The oracle arbitrates language correctness; the formulas arbitrate size.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/witness.hpp"

namespace sclab {

enum class CombinedOp { cat_star, cat_rev };

std::string to_string(CombinedOp op);

struct VerifyReport {
  CombinedOp op = CombinedOp::cat_star;
  int m = 0;
  int n = 0;
  int k1 = 0;  // final states of the first automaton
  int k2 = 0;  // bound parameter: non-initial finals (cat-star) / finals (cat-rev)
  int direct_size = 0;   // reachable states of the direct construction
  int minimal_size = 0;
  int oracle_size = 0;
  std::uint64_t predicted_upper = 0;
  std::optional<std::uint64_t> predicted_tight;
  bool languages_agree = false;
  std::chrono::microseconds elapsed{0};
  // Grid cells outside a source's domain become explicit skip rows.
  bool skipped = false;
  std::string skip_reason;
};

enum class SweepSource { witness_family, random_pairs, search };

struct SweepSpec {
  CombinedOp op = CombinedOp::cat_star;
  int m_lo = 2, m_hi = 2;
  int n_lo = 2, n_hi = 2;
  SweepSource source = SweepSource::witness_family;
  std::uint64_t seed = 1;       // random source: master seed, split per cell
  int count = 100;              // random source: pairs per cell
  double final_density = 0.3;   // random source
  SearchBudget budget;          // search source (its seed is split per cell)
};

/// Uniform random complete transition table; each state is final
/// independently with probability final_density (redrawn once if that
/// leaves no finals and density > 0). Bit-identical output for a given
/// seed on every platform.
Dfa random_dfa(int states, const Alphabet& sigma, double final_density,
               std::uint64_t seed);

/// Runs the direct construction and the oracle route on one pair and fills
/// every report field. Total over equal-alphabet pairs: inputs outside the
/// direct construction's domain take their closed-form route. Throws
/// std::logic_error if a proven size invariant breaks
/// (minimal_size <= direct_size <= predicted_upper).
VerifyReport verify_pair(CombinedOp op, const Dfa& first, const Dfa& second);

/// One report per cell (witness source), per sample (random source), or per
/// cell's best search pair. Rows are sorted by (m, n, sample index) and are
/// deterministic for a given spec regardless of parallelism; cells run
/// concurrently, capped by the SC_LAB_THREADS environment variable.
///
/// Witness-source grids additionally assert the family-level sanity
/// properties: minimal_size strictly grows along each axis, and every cell
/// stays strictly below the composed individual-operation bound.
std::vector<VerifyReport> sweep(const SweepSpec& spec);

/// Pass/fail verdict used for the process exit code: skip rows pass;
/// witness rows need language agreement and minimal_size == predicted_tight;
/// random rows need agreement and minimal_size <= predicted_upper; search
/// rows need agreement of the best pair found.
bool report_passes(SweepSource source, const VerifyReport& row);

/// TSV rendering, tab-separated: op m n k1 k2 direct_size minimal_size
/// predicted_upper predicted_tight agree elapsed_ms. Missing values render
/// as "-"; skip rows render "-" in every data column.
std::string tsv_header();
std::string tsv_row(const VerifyReport& row);

}  // namespace sclab
