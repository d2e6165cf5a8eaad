#include "sclab/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "sclab/combined.hpp"
#include "sclab/rational.hpp"
#include "sclab/rng.hpp"

namespace sclab {

std::string to_string(CombinedOp op) {
  return op == CombinedOp::cat_star ? "cat-star" : "cat-rev";
}

Dfa random_dfa(int states, const Alphabet& sigma, double final_density,
               std::uint64_t seed) {
  if (states < 1) throw std::invalid_argument("random_dfa: needs states >= 1");
  if (!(final_density >= 0.0 && final_density <= 1.0))
    throw std::invalid_argument("random_dfa: density must be in [0, 1]");
  validate(sigma);

  SplitMix64 rng(seed);
  std::vector<std::vector<StateId>> delta(
      static_cast<size_t>(states),
      std::vector<StateId>(static_cast<size_t>(sigma.size())));
  for (auto& row : delta)
    for (auto& cell : row)
      cell = static_cast<StateId>(rng.below(static_cast<std::uint64_t>(states)));

  auto draw_finals = [&] {
    StateSet f;
    for (int s = 0; s < states; ++s)
      if (rng.unit() < final_density) f.push_back(s);
    return f;
  };
  StateSet finals = draw_finals();
  if (finals.empty() && final_density > 0.0) finals = draw_finals();

  return make_dfa(sigma, states, 0, std::move(finals), std::move(delta));
}

// --- per-pair verification ------------------------------------------------------

namespace {

std::uint64_t pow2u(int e) {
  if (e < 0 || e > 63)
    throw std::domain_error("verify: 2^" + std::to_string(e) +
                            " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

struct DirectRoute {
  Dfa result;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> tight;
  int k2 = 0;  // bound parameter recorded in the report
};

DirectRoute direct_cat_star(const Dfa& a, const Dfa& b) {
  const int m = a.state_count;
  const int n = b.state_count;
  const int k1 = static_cast<int>(a.finals.size());
  const StateSet f0 = set_erase(b.finals, b.initial);
  const int k2 = static_cast<int>(f0.size());

  DirectRoute r;
  r.k2 = k2;

  // Tight ceiling for the pair's parameter regime, when one is known.
  if (m == 1) {
    r.tight = 1;
  } else if (n == 1) {
    r.tight = static_cast<std::uint64_t>(m);
  } else if (k1 == 1 && b.finals.size() == 1) {
    r.tight = set_contains(b.finals, b.initial)
                  ? tight_bound_cat_star(m, n, StarCase::final_is_initial)
                  : tight_bound_cat_star(m, n, StarCase::general);
  }

  if (a.finals.empty()) {
    // L1 is empty, so the catenation is empty.
    r.result = empty_language_dfa(a.alphabet);
    r.upper = 1;
  } else if (m == 1) {
    // L1 is universal and lambda is in L2*, so the result is universal.
    r.result = sigma_star_dfa(a.alphabet);
    r.upper = 1;
  } else if (b.finals.empty()) {
    // L2* = {lambda}: the result is L1.
    r.result = trim_reachable(a);
    r.upper = static_cast<std::uint64_t>(m);
  } else if (k2 == 0) {
    // Only final state of b is initial: L2* = L2, plain catenation, with the
    // classic catenation ceiling m 2^n - k1 2^(n-1).
    r.result = determinize(catenate_nfa(a, b)).dfa;
    r.upper = static_cast<std::uint64_t>(m) * pow2u(n) -
              static_cast<std::uint64_t>(k1) * pow2u(n - 1);
  } else {
    r.result = cat_star_direct(a, b);
    r.upper = upper_bound_cat_star(BoundQuery{m, n, k1, k2});
  }
  return r;
}

DirectRoute direct_cat_rev(const Dfa& a, const Dfa& b) {
  const int m = a.state_count;
  const int n = b.state_count;
  const int k1 = static_cast<int>(a.finals.size());
  const int k2 = static_cast<int>(b.finals.size());

  DirectRoute r;
  r.k2 = k2;
  r.result = cat_rev_direct(a, b);
  if (k1 >= 1 && k2 >= 1) {
    r.upper = upper_bound_cat_rev(BoundQuery{m, n, k1, k2});
  } else {
    // The language is empty; the construction still tracks at most the m
    // first components paired with the empty set.
    r.upper = static_cast<std::uint64_t>(m);
  }
  if (k1 == 1 && k2 == 1) r.tight = tight_bound_cat_rev(m, n);
  return r;
}

Dfa oracle_route(CombinedOp op, const Dfa& a, const Dfa& b) {
  Nfa second = op == CombinedOp::cat_star ? star_nfa(b) : reverse_nfa(b);
  return minimize(determinize(catenate_nfa(a, determinize(second).dfa)).dfa);
}

}  // namespace

VerifyReport verify_pair(CombinedOp op, const Dfa& first, const Dfa& second) {
  validate(first);
  validate(second);
  if (first.alphabet != second.alphabet)
    throw std::invalid_argument("verify_pair: alphabets differ");

  auto t0 = std::chrono::steady_clock::now();

  DirectRoute route = op == CombinedOp::cat_star ? direct_cat_star(first, second)
                                                 : direct_cat_rev(first, second);
  Dfa minimal = minimize(route.result);
  Dfa oracle = oracle_route(op, first, second);

  VerifyReport r;
  r.op = op;
  r.m = first.state_count;
  r.n = second.state_count;
  r.k1 = static_cast<int>(first.finals.size());
  r.k2 = route.k2;
  r.direct_size = route.result.state_count;
  r.minimal_size = minimal.state_count;
  r.oracle_size = oracle.state_count;
  r.predicted_upper = route.upper;
  r.predicted_tight = route.tight;
  r.languages_agree = is_equivalent(minimal, oracle);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - t0);

  // Proven size relations; a violation is an implementation defect, never data.
  if (r.minimal_size > r.direct_size ||
      static_cast<std::uint64_t>(r.direct_size) > r.predicted_upper)
    throw std::logic_error("verify_pair: size invariant broken (direct " +
                           std::to_string(r.direct_size) + ", minimal " +
                           std::to_string(r.minimal_size) + ", upper " +
                           std::to_string(r.predicted_upper) + ")");
  return r;
}

// --- sweeps ---------------------------------------------------------------------

namespace {

int thread_cap() {
  if (const char* env = std::getenv("SC_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

VerifyReport skip_row(CombinedOp op, int m, int n, std::string reason) {
  VerifyReport r;
  r.op = op;
  r.m = m;
  r.n = n;
  r.skipped = true;
  r.skip_reason = std::move(reason);
  return r;
}

std::vector<VerifyReport> run_cell(const SweepSpec& spec, int m, int n) {
  switch (spec.source) {
    case SweepSource::witness_family: {
      if (spec.op == CombinedOp::cat_star) {
        if (m < 2 || n != 2)
          return {skip_row(spec.op, m, n,
                           "cat-star witness family is defined for m >= 2, n = 2")};
        WitnessPair w = gen_cat_star_witness(m);
        return {verify_pair(spec.op, w.a, w.b)};
      }
      if (m < 2 || n < 2)
        return {skip_row(spec.op, m, n,
                         "cat-rev witness family is defined for m >= 2, n >= 2")};
      WitnessPair w = gen_cat_rev_witness(m, n);
      return {verify_pair(spec.op, w.a, w.b)};
    }
    case SweepSource::random_pairs: {
      std::vector<VerifyReport> rows;
      rows.reserve(static_cast<size_t>(spec.count));
      Alphabet sigma = Alphabet::abc();
      for (int i = 0; i < spec.count; ++i) {
        Dfa a = random_dfa(m, sigma, spec.final_density,
                           mix_seed({spec.seed, static_cast<std::uint64_t>(m),
                                     static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(i), 0}));
        Dfa b = random_dfa(n, sigma, spec.final_density,
                           mix_seed({spec.seed, static_cast<std::uint64_t>(m),
                                     static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(i), 1}));
        rows.push_back(verify_pair(spec.op, a, b));
      }
      return rows;
    }
    case SweepSource::search: {
      std::uint64_t target = spec.op == CombinedOp::cat_star
                                 ? tight_bound_cat_star(m, n, StarCase::general)
                                 : tight_bound_cat_rev(m, n);
      SearchBudget budget = spec.budget;
      budget.seed = mix_seed({spec.budget.seed, static_cast<std::uint64_t>(m),
                              static_cast<std::uint64_t>(n)});
      SearchOp op = spec.op == CombinedOp::cat_star ? SearchOp::cat_star
                                                    : SearchOp::cat_rev;
      SearchResult found;
      try {
        found = search_witness(op, m, n, target, SearchConstraint::none, budget);
      } catch (const std::invalid_argument& e) {
        return {skip_row(spec.op, m, n, e.what())};
      }
      if (!found.best_pair)
        return {skip_row(spec.op, m, n, "search evaluated no candidates")};
      VerifyReport row =
          verify_pair(spec.op, found.best_pair->first, found.best_pair->second);
      // The cell's goal, not the best pair's own regime ceiling.
      row.predicted_tight = target;
      return {row};
    }
  }
  throw std::invalid_argument("sweep: bad source");
}

}  // namespace

std::vector<VerifyReport> sweep(const SweepSpec& spec) {
  if (spec.m_lo < 1 || spec.m_hi < spec.m_lo || spec.n_lo < 1 ||
      spec.n_hi < spec.n_lo)
    throw std::invalid_argument("sweep: empty or invalid range");
  if (spec.source == SweepSource::random_pairs && spec.count < 1)
    throw std::invalid_argument("sweep: random source needs count >= 1");

  struct Cell {
    int m, n;
  };
  std::vector<Cell> cells;
  for (int m = spec.m_lo; m <= spec.m_hi; ++m)
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) cells.push_back({m, n});

  // Independent cells, deterministic ordered reduction into fixed slots.
  std::vector<std::vector<VerifyReport>> slots(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        slots[i] = run_cell(spec, cells[i].m, cells[i].n);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  int threads = std::min<int>(thread_cap(), static_cast<int>(cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<VerifyReport> rows;
  for (auto& slot : slots)
    for (auto& row : slot) rows.push_back(std::move(row));

  if (spec.source == SweepSource::witness_family) {
    // Family-level sanity on the swept grid: strict growth along each axis
    // and a strict gap below the composed individual-operation bound.
    for (const auto& x : rows) {
      if (x.skipped) continue;
      for (const auto& y : rows) {
        if (y.skipped) continue;
        bool m_step = x.m + 1 == y.m && x.n == y.n;
        bool n_step = x.m == y.m && x.n + 1 == y.n;
        if ((m_step || n_step) && !(x.minimal_size < y.minimal_size))
          throw std::logic_error("sweep: witness grid is not strictly monotone");
      }
      try {
        std::uint64_t composed = spec.op == CombinedOp::cat_star
                                     ? composed_bound_cat_star(x.m, x.n)
                                     : composed_bound_cat_rev(x.m, x.n);
        if (static_cast<std::uint64_t>(x.minimal_size) >= composed)
          throw std::logic_error(
              "sweep: witness cell does not beat the composed bound");
      } catch (const std::domain_error&) {
        // Composed bound exceeds 64 bits; the gap holds a fortiori.
      }
    }
  }
  return rows;
}

bool report_passes(SweepSource source, const VerifyReport& row) {
  if (row.skipped) return true;
  switch (source) {
    case SweepSource::witness_family:
      return row.languages_agree && row.predicted_tight &&
             static_cast<std::uint64_t>(row.minimal_size) == *row.predicted_tight;
    case SweepSource::random_pairs:
      return row.languages_agree &&
             static_cast<std::uint64_t>(row.minimal_size) <= row.predicted_upper;
    case SweepSource::search:
      return row.languages_agree;
  }
  return false;
}

// --- TSV ------------------------------------------------------------------------

std::string tsv_header() {
  return "op\tm\tn\tk1\tk2\tdirect_size\tminimal_size\tpredicted_upper\t"
         "predicted_tight\tagree\telapsed_ms";
}

std::string tsv_row(const VerifyReport& row) {
  std::string out = to_string(row.op);
  out += '\t';
  out += std::to_string(row.m);
  out += '\t';
  out += std::to_string(row.n);
  if (row.skipped) {
    for (int i = 0; i < 8; ++i) out += "\t-";
    return out;
  }
  out += '\t';
  out += std::to_string(row.k1);
  out += '\t';
  out += std::to_string(row.k2);
  out += '\t';
  out += std::to_string(row.direct_size);
  out += '\t';
  out += std::to_string(row.minimal_size);
  out += '\t';
  out += std::to_string(row.predicted_upper);
  out += '\t';
  out += row.predicted_tight ? std::to_string(*row.predicted_tight) : "-";
  out += '\t';
  out += row.languages_agree ? "true" : "false";
  out += '\t';
  out += std::to_string(
      std::chrono::duration_cast<std::chrono::milliseconds>(row.elapsed).count());
  return out;
}

}  // namespace sclab
