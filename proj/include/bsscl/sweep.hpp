#pragma once

// Surgery-family sweeps: evaluate the same chain template in BS(dm, dl)
// across a range of d, with exact values, per-row stats, and formula
// brackets where one of the closed-form families matches.

#include "formulas.hpp"
#include "solver_block.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace bsscl {

struct SweepRow {
  long long d = 0;
  long long M = 0, L = 0;
  bool ok = false;
  Rat value;
  std::string solver;
  LpStats lp;
  long long millis = 0;
  bool tight_no_reduction = false;
  bool have_bracket = false;
  Rat lower, upper;  // formula bracket (equal when the formula is exact)
  std::string error;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::optional<Rat> limit_hint;
};

namespace detail {

inline bool same_chain(const Chain& a, const Chain& b) {
  if (a.terms.size() != b.terms.size()) return false;
  std::vector<bool> used(b.terms.size(), false);
  for (auto& ta : a.terms) {
    bool hit = false;
    for (size_t j = 0; j < b.terms.size() && !hit; ++j) {
      if (used[j] || ta.r != b.terms[j].r) continue;
      if (same_cyclic_word(ta.word, b.terms[j].word)) used[j] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// Recognize the a^k t^2 + 2 t^-1 family; returns k.
inline std::optional<long long> match_eg1(const Chain& c) {
  if (c.terms.size() != 2) return std::nullopt;
  for (int which = 0; which < 2; ++which) {
    const ChainTerm& big = c.terms[which];
    const ChainTerm& tail = c.terms[1 - which];
    if (big.r != 1 || tail.r != 2) continue;
    if (tail.word.syl.size() != 1 || tail.word.syl[0].eps != -1 || tail.word.syl[0].p != 0)
      continue;
    if (big.word.syl.size() != 2) continue;
    const auto& s = big.word.syl;
    for (int rot = 0; rot < 2; ++rot) {
      const Syllable& first = s[rot];
      const Syllable& second = s[1 - rot];
      if (first.eps == 1 && second.eps == 1 && second.p == 0) return to_ll(first.p);
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline SweepRow sweep_row(const std::string& chain_template, long long m, long long l,
                          long long d, const SolverConfig& cfg) {
  SweepRow row;
  row.d = d;
  row.M = d * m;
  row.L = d * l;
  auto t0 = std::chrono::steady_clock::now();
  try {
    GroupParams G = group_params(row.M, row.L);
    Chain chain = parse_chain(chain_template, G);
    row.tight_no_reduction = chain.dropped_elliptic.empty();
    for (auto& t : chain.terms)
      if (t.reduced_from_input) row.tight_no_reduction = false;

    SclResult res = scl_auto(chain, G, cfg);
    if (!res.defined) {
      row.error = "homology obstruction";
    } else {
      row.ok = true;
      row.value = res.value;
      row.solver = res.solver;
      row.lp = res.lp;
    }

    if (auto k = detail::match_eg1(chain)) {
      FormulaResult f = eg1_formula(G, *k);
      row.have_bracket = true;
      row.lower = row.upper = f.value;
    } else if (detail::same_chain(chain, parse_chain("at^2At^-1 + t^-1", G))) {
      FormulaResult f = eg2_formula(G);
      row.have_bracket = true;
      row.upper = f.value;
      row.lower = f.validity == FormulaResult::Validity::Conditional ? f.lower : f.value;
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return row;
}

inline SweepReport surgery_sweep(const std::string& chain_template, long long m, long long l,
                                 long long d_from, long long d_to, const SolverConfig& cfg = {},
                                 int workers = 4,
                                 std::optional<Rat> limit_hint = std::nullopt) {
  if (d_to < d_from) throw Error(ErrKind::Parse, "empty d range");
  SweepReport rep;
  rep.limit_hint = limit_hint;
  size_t count = static_cast<size_t>(d_to - d_from + 1);
  rep.rows.resize(count);
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      rep.rows[i] = sweep_row(chain_template, m, l, d_from + static_cast<long long>(i), cfg);
    }
  };
  int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return rep;
}

inline std::string sweep_csv(const SweepReport& rep) {
  std::ostringstream os;
  os << "d,M,L,num,den,solver,vars,pivots,millis\n";
  for (auto& r : rep.rows) {
    os << r.d << "," << r.M << "," << r.L << ",";
    if (r.ok)
      os << rat_num(r.value).str() << "," << rat_den(r.value).str() << "," << r.solver;
    else
      os << ",,error";
    os << "," << r.lp.vars << "," << r.lp.pivots << "," << r.millis << "\n";
  }
  return os.str();
}

}  // namespace bsscl
