#pragma once

// Shared solver plumbing: result types, the common master-LP row layout
// (pairing + normalizing rows over turn multiset columns), and the exported
// surface summary.

#include "encoding.hpp"
#include "lp.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bsscl {

struct LpStats {
  long long vars = 0, constraints = 0, pivots = 0;
};

struct PieceSolution {
  std::vector<TurnMultiset> pieces;  // support pieces (positive weight)
  std::vector<Rat> weights;
  Rat kappa;
};

struct SclResult {
  bool defined = true;  // false: nonzero t-homology class, scl is infinite
  Rat value;
  std::string solver;  // "block", "pieces", "degenerate", "empty"
  int rho = 0;
  Int dv_abs = 1;
  LpStats lp;
  std::vector<std::string> dropped_elliptic;
  std::string note;
  bool certified = false;            // exact duality certificate verified
  bool infeasible_at_bound = false;  // pieces solver only
  int bound_used = 0;                // pieces solver only
  std::shared_ptr<PieceSolution> pieces;
};

struct SolverConfig {
  enum class Kind { Auto, Block, Pieces } kind = Kind::Auto;
  int max_turns = 0;                    // pieces: 0 = escalate from pieces_start
  int pieces_start = 4;
  int pieces_cap = 16;
  long long block_dv_ceiling = 64;      // auto picks block when dv fits
  long long max_cut_vars = 2'000'000;   // literal block LP only
  long long max_pieces = 5'000'000;
  EncodeLimits encode;
  bool verify = true;
};

// ---------------------------------------------------------------------------
// Master LP rows shared by every solver: one row per unordered paired-turn
// couple (counts must agree), one row per chain loop (turns leaving the fixed
// arc count the loop's coefficient).

struct MasterLayout {
  int n_pair_rows = 0;
  int n_loops = 0;
  std::vector<int> row_of_turn;   // pairing row index per turn id
  std::vector<int> sign_of_turn;  // +1 on the smaller-id side, -1 on the other
  std::vector<int> fixed_arc;     // per loop

  int rows() const { return n_pair_rows + n_loops; }
};

inline MasterLayout master_layout(const Problem& p) {
  MasterLayout ml;
  int nt = p.turns.size();
  // Self-paired turns glue to themselves: no row, sign 0.
  ml.row_of_turn.assign(nt, 0);
  ml.sign_of_turn.assign(nt, 0);
  for (int t = 0; t < nt; ++t) {
    int u = p.turns.pair_idx[t];
    if (t < u) {
      ml.row_of_turn[t] = ml.n_pair_rows;
      ml.row_of_turn[u] = ml.n_pair_rows;
      ml.sign_of_turn[t] = 1;
      ml.sign_of_turn[u] = -1;
      ++ml.n_pair_rows;
    }
  }
  ml.n_loops = static_cast<int>(p.arcs.loop_first.size());
  ml.fixed_arc = p.arcs.loop_first;
  return ml;
}

inline std::vector<LPRow> master_rows(const Problem& p, const MasterLayout& ml) {
  std::vector<LPRow> rows(ml.rows());
  for (int i = 0; i < ml.n_pair_rows; ++i) {
    rows[i].rel = Rel::EQ;
    rows[i].rhs = 0;
  }
  for (int i = 0; i < ml.n_loops; ++i) {
    rows[ml.n_pair_rows + i].rel = Rel::EQ;
    rows[ml.n_pair_rows + i].rhs = p.arcs.loop_r[i];
  }
  return rows;
}

// Sparse master column of a turn multiset.
inline std::vector<std::pair<int, Rat>> master_column(const Problem& p, const MasterLayout& ml,
                                                      const TurnMultiset& piece) {
  std::vector<Rat> pair_acc(ml.n_pair_rows, Rat(0));
  std::vector<Rat> loop_acc(ml.n_loops, Rat(0));
  for (auto& [t, c] : piece) {
    if (ml.sign_of_turn[t] != 0) pair_acc[ml.row_of_turn[t]] += Rat(ml.sign_of_turn[t] * c);
    int from = p.turns.turns[t].from;
    int loop = p.arcs.arcs[from].loop;
    if (ml.fixed_arc[loop] == from) loop_acc[loop] += c;
  }
  std::vector<std::pair<int, Rat>> col;
  for (int i = 0; i < ml.n_pair_rows; ++i)
    if (pair_acc[i] != 0) col.push_back({i, pair_acc[i]});
  for (int i = 0; i < ml.n_loops; ++i)
    if (loop_acc[i] != 0) col.push_back({ml.n_pair_rows + i, loop_acc[i]});
  return col;
}

inline Rat quarter_arc_total(const Problem& p) {
  Rat s = 0;
  for (size_t i = 0; i < p.arcs.loop_r.size(); ++i)
    s += p.arcs.loop_r[i] * p.arcs.loop_count[i];
  return s / 4;
}

// Pre-LP dispatch shared by the solvers: empty chains, the solvable groups
// with |M| = 1 or |L| = 1 (scl vanishes identically there), and the homology
// obstruction.  Returns a finished result when no LP is needed.
inline std::optional<SclResult> scl_precheck(const Chain& chain, const GroupParams& G) {
  SclResult r;
  r.dropped_elliptic = chain.dropped_elliptic;
  auto hc = homology_check(chain, G);
  if (!hc.ok) {
    r.defined = false;
    r.note = "chain has nonzero t-homology class " + rat_str(hc.t_class) + "; scl is undefined";
    return r;
  }
  r.note = hc.note;
  if (chain.terms.empty()) {
    r.value = 0;
    r.solver = "empty";
    r.certified = true;
    return r;
  }
  if (G.M == 1 || G.M == -1 || G.L == 1 || G.L == -1) {
    r.value = 0;
    r.solver = "degenerate";
    r.note = "|M| = 1 or |L| = 1: the group is solvable, scl vanishes";
    r.certified = true;
    return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Integral surface export: scale weights to the least common degree and check
// the Euler-characteristic bookkeeping against the computed value.

struct SurfaceExport {
  Int degree;
  std::vector<TurnMultiset> pieces;
  std::vector<Int> multiplicity;
  Int total_turns;
  Int piece_count;        // sum of multiplicities
  Rat minus_chi_hat;      // total_turns/2 - piece_count, per unit of nothing
  Rat scl;                // minus_chi_hat / (2 * degree)
  bool consistent = false;
};

inline SurfaceExport export_surface(const Problem& p, const PieceSolution& sol,
                                    const Rat& scl_value) {
  SurfaceExport ex;
  Int deg = 1;
  for (auto& w : sol.weights) deg = int_lcm(deg, rat_den(w));
  ex.degree = deg;
  ex.total_turns = 0;
  ex.piece_count = 0;
  for (size_t i = 0; i < sol.pieces.size(); ++i) {
    Rat mult = Rat(deg) * sol.weights[i];
    if (rat_den(mult) != 1) throw Error(ErrKind::Internal, "degree scaling failed");
    Int n = rat_num(mult);
    if (n == 0) continue;
    ex.pieces.push_back(sol.pieces[i]);
    ex.multiplicity.push_back(n);
    long long tcount = 0;
    for (auto& [t, c] : sol.pieces[i]) tcount += c;
    ex.total_turns += n * tcount;
    ex.piece_count += n;
  }
  ex.minus_chi_hat = Rat(ex.total_turns) / 2 - Rat(ex.piece_count);
  ex.scl = ex.minus_chi_hat / (2 * Rat(deg));
  Rat arcsum = 0;
  for (size_t i = 0; i < p.arcs.loop_r.size(); ++i)
    arcsum += p.arcs.loop_r[i] * p.arcs.loop_count[i];
  ex.consistent = (ex.scl == scl_value) && (Rat(ex.total_turns) == Rat(deg) * arcsum);
  return ex;
}

}  // namespace bsscl
