#pragma once

// Extremal-surface analysis: the sufficient per-word criterion, a pseudo-
// inverse probe for reducedness, the branched surface carried by an optimal
// piece solution, and the sound one-face existence verdict.

#include "solver_block.hpp"

#include <deque>
#include <string>
#include <vector>

namespace bsscl {

struct SufficientCheck {
  bool pass = true;
  std::vector<std::string> reasons;  // per-word failures when inconclusive
};

inline SufficientCheck sufficient_extremal_check(const Chain& chain, const GroupParams& G) {
  SufficientCheck out;
  for (auto& term : chain.terms) {
    const TightWord& w = term.word;
    Int h = h_value(w);
    std::string name = word_str(w);
    if (G.M == G.L) {
      Int total = 0;
      for (auto& s : w.syl) total += s.p;
      if (total != 0) {
        out.pass = false;
        out.reasons.push_back(name + ": M = L and total a-exponent " + total.str() + " != 0");
      }
    } else if (G.M == -G.L) {
      if (mod_pos(h, 2) == 1) continue;  // odd surplus passes
      Int salt = s_alt_value(w);
      if (salt != 0) {
        out.pass = false;
        out.reasons.push_back(name + ": M = -L, even h, alternating sum " + salt.str() + " != 0");
      }
    } else {
      if (h != 0) continue;
      Rat s = s_value(w, G);
      if (s != 0) {
        out.pass = false;
        out.reasons.push_back(name + ": h = 0 and s = " + rat_str(s) + " != 0");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pseudo-inverse probe.  Powers reduce to coefficients (g^n and n·g agree as
// chains), so each candidate pair is one small solve: the homology-forced
// minimal coefficient ratio when the h-values have opposite signs, or a grid
// of ratios up to power_bound when both vanish.

struct ProbeResult {
  enum class Status { Reduced, NotReduced, Unknown } status = Status::Unknown;
  int witness_i = -1, witness_j = -1;
  long long witness_p = 0, witness_q = 0;
  std::string note;
};

inline ProbeResult reducedness_probe(const Chain& chain, const GroupParams& G,
                                     int power_bound = 6, const SolverConfig& cfg = {}) {
  ProbeResult out;
  int n = static_cast<int>(chain.terms.size());
  auto test = [&](int i, int j, long long pp, long long qq) -> bool {  // true when scl = 0
    Chain c;
    if (i == j) {
      c.terms.push_back({Rat(pp + qq), chain.terms[i].word, false});
    } else {
      c.terms.push_back({Rat(pp), chain.terms[i].word, false});
      c.terms.push_back({Rat(qq), chain.terms[j].word, false});
    }
    SclResult r = scl_auto(c, G, cfg);
    if (!r.defined) throw Error(ErrKind::Internal, "probe chain fails homology");
    return r.value == 0;
  };
  try {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Int hi = h_value(chain.terms[i].word), hj = h_value(chain.terms[j].word);
        if (hi == 0 && hj == 0) {
          if (i == j) {
            if (test(i, j, 1, 1)) {
              out.status = ProbeResult::Status::NotReduced;
              out.witness_i = i;
              out.witness_j = j;
              out.witness_p = out.witness_q = 1;
              return out;
            }
          } else {
            for (long long pp = 1; pp <= power_bound; ++pp)
              for (long long qq = 1; qq <= power_bound; ++qq)
                if (test(i, j, pp, qq)) {
                  out.status = ProbeResult::Status::NotReduced;
                  out.witness_i = i;
                  out.witness_j = j;
                  out.witness_p = pp;
                  out.witness_q = qq;
                  return out;
                }
          }
        } else if ((hi > 0 && hj < 0) || (hi < 0 && hj > 0)) {
          Int g = int_gcd(int_abs(hi), int_abs(hj));
          long long pp = to_ll(int_abs(hj) / g), qq = to_ll(int_abs(hi) / g);
          if (test(i, j, pp, qq)) {
            out.status = ProbeResult::Status::NotReduced;
            out.witness_i = i;
            out.witness_j = j;
            out.witness_p = pp;
            out.witness_q = qq;
            return out;
          }
        }
        // same-sign or single-zero h-values admit no positive solution: skip
      }
  } catch (const Error& e) {
    if (e.kind != ErrKind::Resource) throw;
    out.status = ProbeResult::Status::Unknown;
    out.note = std::string("probe solve hit a resource ceiling: ") + e.what();
    return out;
  }
  out.status = ProbeResult::Status::Reduced;
  out.note = "pairs with vanishing h-values probed up to power bound " +
             std::to_string(power_bound);
  return out;
}

// ---------------------------------------------------------------------------
// Branched surface carried by a positive piece-weight solution.  Nodes are
// the support pieces; every glued turn-pair locus contributes edges from the
// pieces on its outgoing side (the turn whose source arc exits along +t) to
// the pieces holding the paired turn.  A component is balanced when levels
// can be assigned so each edge climbs exactly one level.

struct BranchedSurface {
  int n_pieces = 0;
  std::vector<Rat> s_piece;     // sum of target-arc windings over the boundary turns
  std::vector<int> component;   // per piece
  int n_components = 0;
  std::vector<bool> balanced;   // per component
  std::vector<int> level;       // per piece; meaningful when its component is balanced
  std::vector<Rat> s_component; // per component; set when balanced, at the given weights
};

inline BranchedSurface branched_surface(const Problem& p, const PieceSolution& sol) {
  int n = static_cast<int>(sol.pieces.size());
  BranchedSurface bs;
  bs.n_pieces = n;
  int nt = p.turns.size();

  std::vector<Rat> usage(nt, Rat(0));
  std::vector<std::vector<int>> holders(nt);
  for (int j = 0; j < n; ++j)
    for (auto& [t, c] : sol.pieces[j]) {
      usage[t] += sol.weights[j] * c;
      holders[t].push_back(j);
    }
  for (int t = 0; t < nt; ++t)
    if (usage[t] != usage[p.turns.pair_idx[t]])
      throw Error(ErrKind::Unsupported, "piece weights violate the gluing condition");

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other piece, level step)
  for (int t = 0; t < nt; ++t) {
    if (p.arcs.arcs[p.turns.turns[t].from].eps_out != 1) continue;  // outgoing side only
    int u_pair = p.turns.pair_idx[t];
    for (int u : holders[t])
      for (int v : holders[u_pair]) {
        adj[u].push_back({v, 1});
        adj[v].push_back({u, -1});
      }
  }

  bs.s_piece.assign(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (auto& [t, c] : sol.pieces[j])
      bs.s_piece[j] += Rat(p.arcs.arcs[p.turns.turns[t].to].winding) * c;

  bs.component.assign(n, -1);
  bs.level.assign(n, 0);
  for (int seed = 0; seed < n; ++seed) {
    if (bs.component[seed] >= 0) continue;
    int comp = bs.n_components++;
    bool ok = true;
    std::deque<int> bfs{seed};
    bs.component[seed] = comp;
    bs.level[seed] = 0;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (auto& [v, step] : adj[u]) {
        if (bs.component[v] < 0) {
          bs.component[v] = comp;
          bs.level[v] = bs.level[u] + step;
          bfs.push_back(v);
        } else if (bs.level[v] != bs.level[u] + step) {
          ok = false;
        }
      }
    }
    bs.balanced.push_back(ok);
    bs.s_component.push_back(Rat(0));
  }

  Rat ml = Rat(Int(p.G.m), Int(p.G.l));
  for (int j = 0; j < n; ++j) {
    int comp = bs.component[j];
    if (!bs.balanced[comp]) continue;
    bs.s_component[comp] += sol.weights[j] * bs.s_piece[j] * rat_pow(ml, bs.level[j]);
  }
  return bs;
}

// ---------------------------------------------------------------------------
// One-face verdict: on the face spanned by the optimum's support, look for
// weights that stay optimal, keep every piece strictly positive, and make the
// s-value of every balanced component vanish.  Sound but not complete.

struct ExtremalVerdict {
  enum class Status { Exists, Unknown } status = Status::Unknown;
  std::vector<std::string> reasons;
  bool surface_built = false;
  BranchedSurface surface;
  Rat delta;                 // positivity margin of the certificate weights
  std::vector<Rat> weights;  // certificate weights (Exists only)
};

inline ExtremalVerdict extremal_verdict(const Chain& chain, const GroupParams& G,
                                        const SclResult& solved, int power_bound = 6,
                                        const SolverConfig& cfg = {}) {
  ExtremalVerdict out;
  if (G.M == G.L || G.M == -G.L) {
    out.reasons.push_back("M = ±L: the one-face criterion does not apply; use the sum rules");
    return out;
  }
  ProbeResult probe = reducedness_probe(chain, G, power_bound, cfg);
  if (probe.status == ProbeResult::Status::NotReduced) {
    out.reasons.push_back(
        "chain is not reduced: scl vanishes on " + std::to_string(probe.witness_p) + "·(term " +
        std::to_string(probe.witness_i + 1) + ") + " + std::to_string(probe.witness_q) +
        "·(term " + std::to_string(probe.witness_j + 1) + ")");
    return out;
  }
  if (probe.status == ProbeResult::Status::Unknown) {
    out.reasons.push_back("reducedness undecided: " + probe.note);
    return out;
  }
  if (!solved.pieces || solved.pieces->pieces.empty()) {
    out.reasons.push_back("no piece solution available (run the cycle or piece solver)");
    return out;
  }

  Problem p = build_problem(chain, G, cfg.encode);
  const PieceSolution& sol = *solved.pieces;
  out.surface = branched_surface(p, sol);
  out.surface_built = true;

  int n = static_cast<int>(sol.pieces.size());
  MasterLayout ml = master_layout(p);
  LPModel lp;
  lp.nvars = n + 1;  // weights, then the margin variable
  lp.maximize = true;
  lp.rows = master_rows(p, ml);
  for (int j = 0; j < n; ++j)
    for (auto& [r, val] : master_column(p, ml, sol.pieces[j]))
      lp.rows[r].coef.push_back({j, val});
  {
    LPRow total;
    total.rel = Rel::EQ;
    total.rhs = sol.kappa;
    for (int j = 0; j < n; ++j) total.coef.push_back({j, Rat(1)});
    lp.rows.push_back(std::move(total));
  }
  Rat mlrat = Rat(Int(G.m), Int(G.l));
  for (int comp = 0; comp < out.surface.n_components; ++comp) {
    if (!out.surface.balanced[comp]) continue;
    LPRow srow;
    srow.rel = Rel::EQ;
    srow.rhs = 0;
    for (int j = 0; j < n; ++j)
      if (out.surface.component[j] == comp && out.surface.s_piece[j] != 0)
        srow.coef.push_back({j, out.surface.s_piece[j] * rat_pow(mlrat, out.surface.level[j])});
    lp.rows.push_back(std::move(srow));
  }
  for (int j = 0; j < n; ++j) {
    LPRow pos;
    pos.rel = Rel::GE;
    pos.rhs = 0;
    pos.coef = {{j, Rat(1)}, {n, Rat(-1)}};
    lp.rows.push_back(std::move(pos));
  }
  lp.objective.push_back({n, Rat(1)});

  LPSolution ls = lp_solve(lp);
  if (ls.status == LPStatus::Infeasible) {
    out.reasons.push_back("no optimal reweighting on this face kills every balanced s-value");
    return out;
  }
  if (ls.status != LPStatus::Optimal)
    throw Error(ErrKind::Internal, "face LP unbounded");
  std::string why;
  if (!lp_verify_optimality(lp, ls, &why))
    throw Error(ErrKind::Internal, "face LP certificate failed: " + why);
  out.delta = ls.objective;
  if (out.delta > 0) {
    out.status = ExtremalVerdict::Status::Exists;
    out.weights.assign(ls.x.begin(), ls.x.begin() + n);
  } else {
    out.reasons.push_back("balanced s-values vanish only on the boundary of the face");
  }
  return out;
}

}  // namespace bsscl
