#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sclab/automata.hpp"
#include "sclab/combined.hpp"
#include "sclab/verify.hpp"
#include "sclab/witness.hpp"

using namespace sclab;

namespace {

// Everything except the timing column, which legitimately varies per run.
std::string stable_part(const VerifyReport& row) {
  std::string s = tsv_row(row);
  return s.substr(0, s.rfind('\t'));
}

std::vector<std::string> stable_parts(const std::vector<VerifyReport>& rows) {
  std::vector<std::string> out;
  for (const VerifyReport& r : rows) out.push_back(stable_part(r));
  return out;
}

}  // namespace

TEST_CASE("random_dfa is seed-deterministic and respects its shape") {
  Alphabet sigma = Alphabet::abc();
  Dfa a = random_dfa(5, sigma, 0.3, 42);
  Dfa b = random_dfa(5, sigma, 0.3, 42);
  CHECK(a == b);
  CHECK(a.state_count == 5);
  CHECK(a.alphabet == sigma);
  CHECK(a.initial == 0);
  // The one-shot redraw makes final-free draws rarer than the raw density
  // (p^2 per automaton), but deliberately does not rule them out: the
  // harness has to cope with empty-language operands anyway.
  int empty_finals = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    if (random_dfa(3, sigma, 0.1, seed).finals.empty()) ++empty_finals;
  CHECK(empty_finals > 0);
  CHECK(empty_finals < 50);
  int empty_dense = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    if (random_dfa(3, sigma, 0.5, seed).finals.empty()) ++empty_dense;
  CHECK(empty_dense < empty_finals);  // redraw suppresses, density dominates
  // Zero density means no finals at all.
  CHECK(random_dfa(3, sigma, 0.0, 7).finals.empty());
  // Different seeds give different tables (overwhelmingly).
  CHECK(random_dfa(5, sigma, 0.3, 1) != random_dfa(5, sigma, 0.3, 2));
}

TEST_CASE("verify_pair fills the witness-cell report") {
  WitnessPair w = gen_cat_rev_witness(2, 2);
  VerifyReport r = verify_pair(CombinedOp::cat_rev, w.a, w.b);
  CHECK(r.op == CombinedOp::cat_rev);
  CHECK(r.m == 2);
  CHECK(r.n == 2);
  CHECK(r.k1 == 1);
  CHECK(r.k2 == 1);
  CHECK(r.minimal_size == 5);
  CHECK(r.oracle_size == 5);
  CHECK(r.direct_size >= r.minimal_size);
  CHECK(r.predicted_upper == 5);
  REQUIRE(r.predicted_tight.has_value());
  CHECK(*r.predicted_tight == 5);
  CHECK(r.languages_agree);
  CHECK_FALSE(r.skipped);

  WitnessPair s = gen_cat_star_witness(2);
  VerifyReport t = verify_pair(CombinedOp::cat_star, s.a, s.b);
  CHECK(t.minimal_size == 5);
  CHECK(t.predicted_upper == 5);
  REQUIRE(t.predicted_tight.has_value());
  CHECK(*t.predicted_tight == 5);
  CHECK(t.languages_agree);
}

TEST_CASE("verify_pair routes the degenerate cat-star shapes") {
  Alphabet sigma = Alphabet::abc();

  // m = 1 universal first operand: the answer is always one state.
  VerifyReport u = verify_pair(CombinedOp::cat_star, sigma_star_dfa(sigma),
                               gen_cat_star_witness(2).b);
  CHECK(u.minimal_size == 1);
  CHECK(u.predicted_upper == 1);
  CHECK(u.languages_agree);

  // Final-free first operand: empty language.
  Dfa empty2 = make_dfa(sigma, 2, 0, {}, {{1, 1, 1}, {0, 0, 0}});
  VerifyReport e = verify_pair(CombinedOp::cat_star, empty2,
                               gen_cat_star_witness(2).b);
  CHECK(e.minimal_size == 1);
  CHECK(e.k1 == 0);
  CHECK(e.languages_agree);

  // finals = {initial} second operand: plain catenation and its ceiling.
  Dfa a = gen_cat_star_witness(3).a;
  Dfa self_final = make_dfa(sigma, 2, 0, {0}, {{1, 0, 0}, {0, 1, 0}});
  VerifyReport p = verify_pair(CombinedOp::cat_star, a, self_final);
  CHECK(p.k2 == 0);
  CHECK(p.predicted_upper == 3ull * 4 - 1ull * 2);  // m 2^n - k1 2^(n-1)
  CHECK(p.languages_agree);
  CHECK(static_cast<std::uint64_t>(p.minimal_size) <= p.predicted_upper);

  // Final-free second operand for cat-rev: empty reversal, upper m.
  VerifyReport v = verify_pair(CombinedOp::cat_rev, a, empty2);
  CHECK(v.predicted_upper == 3);
  CHECK(v.languages_agree);
}

TEST_CASE("verify_pair holds its size chain on a random corpus") {
  SplitMix64 rng(123123);
  for (int round = 0; round < 60; ++round) {
    int k = 1 + static_cast<int>(rng.below(3));
    Alphabet sigma = Alphabet::first(k);
    Dfa a = random_dfa(1 + static_cast<int>(rng.below(4)), sigma,
                       round % 6 == 0 ? 0.0 : 0.35, rng.next());
    Dfa b = random_dfa(1 + static_cast<int>(rng.below(4)), sigma,
                       round % 9 == 0 ? 0.0 : 0.35, rng.next());
    for (CombinedOp op : {CombinedOp::cat_star, CombinedOp::cat_rev}) {
      VerifyReport r = verify_pair(op, a, b);
      CHECK(r.languages_agree);
      CHECK(r.minimal_size == r.oracle_size);
      CHECK(r.minimal_size <= r.direct_size);
      CHECK(static_cast<std::uint64_t>(r.direct_size) <= r.predicted_upper);
    }
  }
}

TEST_CASE("witness sweep covers the grid exactly and passes") {
  SweepSpec spec;
  spec.op = CombinedOp::cat_rev;
  spec.m_lo = 2;
  spec.m_hi = 4;
  spec.n_lo = 2;
  spec.n_hi = 5;
  spec.source = SweepSource::witness_family;
  std::vector<VerifyReport> rows = sweep(spec);
  REQUIRE(rows.size() == 12);
  std::size_t idx = 0;
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 5; ++n) {
      const VerifyReport& r = rows[idx++];
      CHECK(r.m == m);
      CHECK(r.n == n);
      CHECK(report_passes(SweepSource::witness_family, r));
      CHECK(static_cast<std::uint64_t>(r.minimal_size) ==
            tight_bound_cat_rev(m, n));
    }
}

TEST_CASE("sweep rows are reproducible apart from timing") {
  SweepSpec spec;
  spec.op = CombinedOp::cat_star;
  spec.m_lo = 2;
  spec.m_hi = 5;
  spec.n_lo = 2;
  spec.n_hi = 2;
  spec.source = SweepSource::witness_family;
  auto first = stable_parts(sweep(spec));
  auto second = stable_parts(sweep(spec));
  CHECK(first == second);

  // A single worker thread must produce the identical report.
  setenv("SC_LAB_THREADS", "1", 1);
  auto serial = stable_parts(sweep(spec));
  unsetenv("SC_LAB_THREADS");
  CHECK(first == serial);
}

TEST_CASE("witness sweep skips cells outside the family domain") {
  SweepSpec spec;
  spec.op = CombinedOp::cat_rev;
  spec.m_lo = 1;
  spec.m_hi = 2;
  spec.n_lo = 2;
  spec.n_hi = 2;
  spec.source = SweepSource::witness_family;
  std::vector<VerifyReport> rows = sweep(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].m == 1);
  CHECK(rows[0].skipped);
  CHECK_FALSE(rows[0].skip_reason.empty());
  CHECK(report_passes(SweepSource::witness_family, rows[0]));
  CHECK_FALSE(rows[1].skipped);

  // The cat-star family exists only at n = 2; other n-cells are skips.
  SweepSpec star;
  star.op = CombinedOp::cat_star;
  star.m_lo = 2;
  star.m_hi = 2;
  star.n_lo = 2;
  star.n_hi = 3;
  star.source = SweepSource::witness_family;
  std::vector<VerifyReport> srows = sweep(star);
  REQUIRE(srows.size() == 2);
  CHECK_FALSE(srows[0].skipped);
  CHECK(srows[1].skipped);
}

TEST_CASE("random sweep produces count rows per cell and passes") {
  SweepSpec spec;
  spec.op = CombinedOp::cat_rev;
  spec.m_lo = 2;
  spec.m_hi = 3;
  spec.n_lo = 2;
  spec.n_hi = 2;
  spec.source = SweepSource::random_pairs;
  spec.seed = 2718;
  spec.count = 8;
  std::vector<VerifyReport> rows = sweep(spec);
  REQUIRE(rows.size() == 16);
  for (const VerifyReport& r : rows) {
    CHECK(report_passes(SweepSource::random_pairs, r));
    CHECK(r.languages_agree);
    CHECK(static_cast<std::uint64_t>(r.minimal_size) <= r.predicted_upper);
  }
  // Same spec, same rows.
  CHECK(stable_parts(rows) == stable_parts(sweep(spec)));
}

TEST_CASE("search sweep records the per-cell best pair") {
  SweepSpec spec;
  spec.op = CombinedOp::cat_rev;
  spec.m_lo = 1;
  spec.m_hi = 1;
  spec.n_lo = 2;
  spec.n_hi = 2;
  spec.source = SweepSource::search;
  spec.budget.alphabet_size = 2;
  spec.budget.max_candidates = 1000000;
  std::vector<VerifyReport> rows = sweep(spec);
  REQUIRE(rows.size() == 1);
  CHECK(report_passes(SweepSource::search, rows[0]));
  REQUIRE(rows[0].predicted_tight.has_value());
  CHECK(*rows[0].predicted_tight == tight_bound_cat_rev(1, 2));
  CHECK(rows[0].minimal_size == 2);  // the searched target is reachable here
}

TEST_CASE("tsv rendering is fixed-schema") {
  CHECK(tsv_header() ==
        "op\tm\tn\tk1\tk2\tdirect_size\tminimal_size\tpredicted_upper\t"
        "predicted_tight\tagree\telapsed_ms");

  WitnessPair w = gen_cat_rev_witness(2, 2);
  VerifyReport r = verify_pair(CombinedOp::cat_rev, w.a, w.b);
  std::string row = tsv_row(r);
  CHECK(stable_part(r) == "cat-rev\t2\t2\t1\t1\t5\t5\t5\t5\ttrue");

  // Missing tight bound renders as a dash.
  Dfa a = random_dfa(3, Alphabet::abc(), 0.6, 5);   // several finals
  Dfa b = random_dfa(3, Alphabet::abc(), 0.6, 6);
  VerifyReport s = verify_pair(CombinedOp::cat_rev, a, b);
  if (!s.predicted_tight) {
    std::string cell = tsv_row(s);
    // predicted_tight is the 9th column.
    std::size_t pos = 0;
    for (int i = 0; i < 8; ++i) pos = cell.find('\t', pos) + 1;
    CHECK(cell.substr(pos, cell.find('\t', pos) - pos) == "-");
  }

  // Skip rows carry dashes in every data column.
  VerifyReport skip;
  skip.op = CombinedOp::cat_star;
  skip.m = 1;
  skip.n = 2;
  skip.skipped = true;
  skip.skip_reason = "family needs m >= 2";
  std::string srow = tsv_row(skip);
  CHECK(srow.substr(0, srow.rfind('\t')) ==
        "cat-star\t1\t2\t-\t-\t-\t-\t-\t-\t-");
}
