#pragma once

// Production solver: column generation over cycles in the lifted winding
// graph, plus the literal block/cut LP (small cross-check), the dual
// turn-cost certificate checker, and the automatic solver dispatch.

#include "result.hpp"
#include "solver_pieces.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace bsscl {

// ---------------------------------------------------------------------------
// Lifted graph: nodes (arc, residue mod dv); every turn type induces one edge
// per residue, shifting it by the turn's winding delta.  Disk-like pieces are
// exactly the closed walks, and every closed walk decomposes into simple
// cycles, so pricing only needs simple cycles.

struct LiftedGraph {
  int n_arcs = 0;
  long long dv = 1;
  int n_nodes = 0;
  struct Edge {
    int to;
    int turn;
  };
  std::vector<std::vector<Edge>> adj;
};

inline LiftedGraph lifted_graph(const Problem& p, long long max_edges = 5'000'000) {
  LiftedGraph g;
  g.n_arcs = p.arcs.size();
  g.dv = p.turns.dv;
  long long nn = static_cast<long long>(g.n_arcs) * g.dv;
  long long ne = static_cast<long long>(p.turns.size()) * g.dv;
  if (nn > max_edges || ne > max_edges)
    throw Error(ErrKind::Resource, "lifted cycle graph too large; use the piece solver");
  g.n_nodes = static_cast<int>(nn);
  g.adj.assign(g.n_nodes, {});
  for (int t = 0; t < p.turns.size(); ++t) {
    const TurnType& T = p.turns.turns[t];
    long long delta = p.turns.delta[t];
    for (long long r = 0; r < g.dv; ++r) {
      int u = static_cast<int>(T.from * g.dv + r);
      int v = static_cast<int>(T.to * g.dv + (r + delta) % g.dv);
      g.adj[u].push_back({v, t});
    }
  }
  return g;
}

struct CycleCand {
  Rat cost;
  TurnMultiset piece;
};

namespace detail {

inline TurnMultiset multiset_of(std::map<int, int>& m) {
  return TurnMultiset(m.begin(), m.end());
}

}  // namespace detail

// Best simple cycles under per-turn edge costs w.  If a negative cycle exists
// it is returned alone; otherwise shortest-path potentials make the reduced
// costs nonnegative and a Dijkstra sweep per start node (restricted to nodes
// with id >= start, so each simple cycle is met at its minimal node) yields
// the per-start minima.  Candidates come back deduplicated and sorted by
// cost; the first entry attains the global simple-cycle minimum.
inline std::vector<CycleCand> price_cycles(const LiftedGraph& g, const std::vector<Rat>& w) {
  int n = g.n_nodes;
  std::vector<Rat> dist(n, Rat(0));
  std::vector<int> par_node(n, -1), par_turn(n, -1);
  int witness = -1;
  for (int it = 0; it < n; ++it) {
    bool changed = false;
    for (int u = 0; u < n; ++u)
      for (auto& e : g.adj[u]) {
        Rat nd = dist[u] + w[e.turn];
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          par_node[e.to] = u;
          par_turn[e.to] = e.turn;
          changed = true;
          if (it == n - 1) witness = e.to;
        }
      }
    if (!changed) break;
  }

  if (witness >= 0) {
    // negative cycle: walk n predecessor steps to land inside it
    int y = witness;
    for (int i = 0; i < n; ++i) y = par_node[y];
    std::map<int, int> mult;
    Rat c = 0;
    int u = y;
    do {
      mult[par_turn[u]] += 1;
      c += w[par_turn[u]];
      u = par_node[u];
    } while (u != y);
    return {CycleCand{c, detail::multiset_of(mult)}};
  }

  // no negative cycle: dist[] are valid potentials
  const std::vector<Rat>& phi = dist;
  std::vector<CycleCand> out;
  std::set<TurnMultiset> seen;
  std::vector<Rat> d2(n);
  std::vector<int> stamp(n, -1), done(n, -1), par2_node(n, -1), par2_turn(n, -1);
  using QE = std::pair<Rat, int>;
  for (int s = 0; s < n; ++s) {
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    d2[s] = 0;
    stamp[s] = s;
    pq.push({Rat(0), s});
    bool have = false;
    Rat best;
    int best_u = -1, best_turn = -1;
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (done[u] == s || du != d2[u]) continue;
      done[u] = s;
      if (have && du >= best) break;  // reduced costs are nonnegative
      for (auto& e : g.adj[u]) {
        Rat red = du + w[e.turn] + phi[u] - phi[e.to];
        if (e.to == s) {
          if (!have || red < best) {
            have = true;
            best = red;
            best_u = u;
            best_turn = e.turn;
          }
          continue;
        }
        if (e.to < s) continue;
        if (stamp[e.to] != s || red < d2[e.to]) {
          stamp[e.to] = s;
          d2[e.to] = red;
          par2_node[e.to] = u;
          par2_turn[e.to] = e.turn;
          pq.push({red, e.to});
        }
      }
    }
    if (!have) continue;
    std::map<int, int> mult;
    mult[best_turn] += 1;
    for (int u = best_u; u != s; u = par2_node[u]) mult[par2_turn[u]] += 1;
    auto piece = detail::multiset_of(mult);
    if (seen.insert(piece).second) out.push_back({best, piece});
  }
  std::sort(out.begin(), out.end(), [](const CycleCand& a, const CycleCand& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.piece < b.piece;
  });
  return out;
}

// ---------------------------------------------------------------------------

inline SclResult scl_block(const Chain& chain, const GroupParams& G,
                           const SolverConfig& cfg = {}) {
  if (auto pre = scl_precheck(chain, G)) return *pre;
  Problem p = build_problem(chain, G, cfg.encode);

  SclResult res;
  res.solver = "block";
  res.rho = p.wc.rho;
  res.dv_abs = p.wc.dv_abs;
  res.dropped_elliptic = chain.dropped_elliptic;
  res.note = homology_check(chain, G).note;

  LiftedGraph g = lifted_graph(p);
  MasterLayout ml = master_layout(p);
  auto rows = master_rows(p, ml);
  int nt = p.turns.size();

  LPModel base;
  base.nvars = 0;
  base.maximize = true;
  base.rows = rows;
  Simplex s(base);
  res.lp.constraints = static_cast<long long>(rows.size());

  std::vector<TurnMultiset> added;
  std::vector<std::vector<std::pair<int, Rat>>> added_cols;
  std::set<TurnMultiset> dedup;
  bool price_certified = false;

  auto turn_price = [&](const std::vector<Rat>& y) {
    std::vector<Rat> w(nt, Rat(0));
    for (int t = 0; t < nt; ++t) {
      w[t] = Rat(ml.sign_of_turn[t]) * y[ml.row_of_turn[t]];
      int from = p.turns.turns[t].from;
      int loop = p.arcs.arcs[from].loop;
      if (ml.fixed_arc[loop] == from) w[t] += y[ml.n_pair_rows + loop];
    }
    return w;
  };

  long long guard = 0;
  while (true) {
    if (++guard > 1'000'000) throw Error(ErrKind::Internal, "column generation did not converge");
    LPStatus st = s.solve();
    if (st == LPStatus::Unbounded)
      throw Error(ErrKind::Internal, "piece master unbounded");
    bool farkas_mode = (st == LPStatus::Infeasible);
    std::vector<Rat> w = turn_price(farkas_mode ? s.farkas() : s.duals());
    if (farkas_mode)
      for (auto& c : w) c = -c;
    auto cands = price_cycles(g, w);
    Rat thresh = farkas_mode ? Rat(0) : Rat(1);
    size_t taken = 0;
    for (auto& cand : cands) {
      if (!(cand.cost < thresh)) break;
      if (!dedup.insert(cand.piece).second)
        throw Error(ErrKind::Internal, "pricing returned a duplicate piece");
      auto col = master_column(p, ml, cand.piece);
      s.add_column(col, Rat(1));
      added.push_back(cand.piece);
      added_cols.push_back(col);
      if (++taken >= 20) break;
    }
    if (taken == 0) {
      if (farkas_mode)
        throw Error(ErrKind::Internal, "no admissible surface found (infeasible master)");
      price_certified = true;
      break;
    }
  }

  Rat kappa = s.objective();
  res.value = quarter_arc_total(p) - kappa / 2;
  res.lp.vars = static_cast<long long>(added.size());
  res.lp.pivots = s.pivots();

  auto x = s.primal();
  auto sol = std::make_shared<PieceSolution>();
  sol->kappa = kappa;
  for (size_t v = 0; v < added.size(); ++v)
    if (x[v] > 0) {
      sol->pieces.push_back(added[v]);
      sol->weights.push_back(x[v]);
    }
  res.pieces = sol;

  if (cfg.verify) {
    LPModel full;
    full.nvars = static_cast<int>(added.size());
    full.maximize = true;
    full.rows = rows;
    for (size_t v = 0; v < added.size(); ++v) {
      full.objective.push_back({static_cast<int>(v), Rat(1)});
      for (auto& [r, val] : added_cols[v]) full.rows[r].coef.push_back({static_cast<int>(v), val});
    }
    LPSolution ls;
    ls.status = LPStatus::Optimal;
    ls.objective = kappa;
    ls.x = x;
    ls.y = s.duals();
    std::string why;
    bool master_ok = lp_verify_optimality(full, ls, &why);
    if (!master_ok) throw Error(ErrKind::Internal, "cycle master certificate failed: " + why);
    res.certified = master_ok && price_certified;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Literal block/cut LP.  Variables are the cut tuples; a block is a run of
// dv unit intervals keyed by its base interval, junction flow closes blocks
// up, genuine cuts glue in matched point-pair classes, and turn pairing plus
// loop normalization are counted through right-end intervals.

struct BlockLP {
  LPModel model;
  std::vector<CutVar> cuts;
  long long n_flow = 0, n_class = 0, n_pair = 0, n_loops = 0;
};

inline BlockLP build_block_lp(const Problem& p, long long max_cuts = 2'000'000) {
  if (p.turns.dv == 1)
    throw Error(ErrKind::Unsupported,
                "vertex modulus 1: the block decomposition is degenerate, use the cycle solver");
  BlockLP out;
  IntervalAlphabet ia = interval_alphabet(p.arcs, p.turns);
  out.cuts = generate_cuts(ia, max_cuts);
  long long D = ia.dv;
  MasterLayout ml = master_layout(p);

  std::map<std::tuple<long long, long long, long long>, int> flow_row;
  std::map<std::pair<long long, long long>, int> class_row;
  std::vector<std::map<int, Rat>> rowacc;  // var -> coef per row
  std::vector<Rat> rhs;
  auto flow_of = [&](long long Ib, long long I, long long pos) {
    auto key = std::make_tuple(Ib, I, pos);
    auto it = flow_row.find(key);
    if (it != flow_row.end()) return it->second;
    int r = static_cast<int>(rowacc.size());
    flow_row[key] = r;
    rowacc.emplace_back();
    rhs.push_back(Rat(0));
    return r;
  };
  auto class_of = [&](long long pa, long long pb) {
    auto key = std::make_pair(pa, pb);
    auto it = class_row.find(key);
    if (it != class_row.end()) return it->second;
    int r = static_cast<int>(rowacc.size());
    class_row[key] = r;
    rowacc.emplace_back();
    rhs.push_back(Rat(0));
    return r;
  };

  for (size_t j = 0; j < out.cuts.size(); ++j) {
    const CutVar& q = out.cuts[j];
    int jj = static_cast<int>(j);
    rowacc[flow_of(q.Ib, q.Ik, q.k)][jj] += 1;
    rowacc[flow_of(q.Ib, q.Ik1, q.k == D ? 1 : q.k + 1)][jj] -= 1;
  }
  out.n_flow = static_cast<long long>(rowacc.size());
  for (size_t j = 0; j < out.cuts.size(); ++j) {
    const CutVar& q = out.cuts[j];
    if (!q.genuine) continue;
    long long pa = ia.point_after(q.Ik), pb = ia.point_before(q.Ik1);
    int jj = static_cast<int>(j);
    if (q.k == 1) rowacc[class_of(pa, pb)][jj] += 1;
    else rowacc[class_of(pb, pa)][jj] -= 1;  // #_N enters through the swapped key
  }
  out.n_class = static_cast<long long>(rowacc.size()) - out.n_flow;

  // pairing and normalizing rows, counting right-end intervals
  int pair_base_row = static_cast<int>(rowacc.size());
  for (int i = 0; i < ml.n_pair_rows; ++i) {
    rowacc.emplace_back();
    rhs.push_back(Rat(0));
  }
  int loop_base_row = static_cast<int>(rowacc.size());
  for (int i = 0; i < ml.n_loops; ++i) {
    rowacc.emplace_back();
    rhs.push_back(p.arcs.loop_r[i]);
  }
  out.n_pair = ml.n_pair_rows;
  out.n_loops = ml.n_loops;
  for (size_t j = 0; j < out.cuts.size(); ++j) {
    long long I = out.cuts[j].Ik1;
    int h = ia.host_of(I);
    if (I != ia.first_of_host(h)) continue;
    int jj = static_cast<int>(j);
    if (h >= ia.n_arcs) {
      int t = h - ia.n_arcs;
      rowacc[pair_base_row + ml.row_of_turn[t]][jj] += Rat(ml.sign_of_turn[t]);
    } else {
      int loop = p.arcs.arcs[h].loop;
      if (ml.fixed_arc[loop] == h) rowacc[loop_base_row + loop][jj] += 1;
    }
  }

  out.model.nvars = static_cast<int>(out.cuts.size());
  out.model.maximize = true;
  for (size_t r = 0; r < rowacc.size(); ++r) {
    LPRow row;
    row.rel = Rel::EQ;
    row.rhs = rhs[r];
    for (auto& [v, c] : rowacc[r])
      if (c != 0) row.coef.push_back({v, c});
    out.model.rows.push_back(std::move(row));
  }
  Rat dummy_chi = Rat(1) / D, genuine_chi = Rat(1) / D - rat(1, 2);
  for (size_t j = 0; j < out.cuts.size(); ++j)
    out.model.objective.push_back({static_cast<int>(j), out.cuts[j].genuine ? genuine_chi : dummy_chi});
  return out;
}

inline SclResult scl_block_literal(const Chain& chain, const GroupParams& G,
                                   const SolverConfig& cfg = {}) {
  if (auto pre = scl_precheck(chain, G)) return *pre;
  Problem p = build_problem(chain, G, cfg.encode);
  BlockLP blp = build_block_lp(p, cfg.max_cut_vars);
  LPSolution ls = lp_solve(blp.model);
  if (ls.status != LPStatus::Optimal)
    throw Error(ErrKind::Internal, "block LP did not reach an optimum");
  SclResult res;
  res.solver = "block-literal";
  res.rho = p.wc.rho;
  res.dv_abs = p.wc.dv_abs;
  res.dropped_elliptic = chain.dropped_elliptic;
  res.note = homology_check(chain, G).note;
  res.value = quarter_arc_total(p) - ls.objective / 2;
  res.lp.vars = blp.model.nvars;
  res.lp.constraints = static_cast<long long>(blp.model.rows.size());
  res.lp.pivots = ls.pivots;
  if (cfg.verify) {
    std::string why;
    res.certified = lp_verify_optimality(blp.model, ls, &why);
    if (!res.certified) throw Error(ErrKind::Internal, "block LP certificate failed: " + why);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Dual certificate: nonnegative per-turn costs where every disk-like piece
// costs at least 1 bound kappa by the max of cost over the turn-usage
// polytope (balance + pairing + normalizing), hence bound scl from below.

struct CostReport {
  bool costs_ok = true;
  bool pieces_ok = true;  // every enumerated piece costs >= 1
  long long pieces_checked = 0;
  int bound = 0;
  std::optional<TurnMultiset> violator;
  Rat violator_cost;
  bool bounded = false;  // usage polytope max is finite
  Rat K;
  Rat scl_lower;
};

inline CostReport verify_turn_costs(const Chain& chain, const GroupParams& G,
                                    const std::vector<Rat>& costs, int piece_bound,
                                    const SolverConfig& cfg = {}) {
  Problem p = build_problem(chain, G, cfg.encode);
  int nt = p.turns.size();
  CostReport rep;
  rep.bound = piece_bound;
  if (static_cast<int>(costs.size()) != nt)
    throw Error(ErrKind::Parse, "cost table size mismatch: need one cost per turn type");
  for (auto& c : costs)
    if (c < 0) rep.costs_ok = false;
  if (!rep.costs_ok) return rep;

  try {
    enumerate_disklike_pieces(p, piece_bound, cfg.max_pieces, [&](const TurnMultiset& piece) {
      ++rep.pieces_checked;
      Rat q = 0;
      for (auto& [t, c] : piece) q += costs[t] * c;
      if (q < 1 && !rep.violator) {
        rep.pieces_ok = false;
        rep.violator = piece;
        rep.violator_cost = q;
      }
    });
  } catch (const Error& e) {
    if (e.kind != ErrKind::Resource) throw;
    throw Error(ErrKind::Resource, std::string("piece check: ") + e.what());
  }
  if (!rep.pieces_ok) return rep;

  MasterLayout ml = master_layout(p);
  LPModel lp;
  lp.nvars = nt;
  lp.maximize = true;
  int n_arcs = p.arcs.size();
  std::vector<LPRow> balance(n_arcs);
  for (auto& r : balance) {
    r.rel = Rel::EQ;
    r.rhs = 0;
  }
  for (int t = 0; t < nt; ++t) {
    balance[p.turns.turns[t].from].coef.push_back({t, Rat(1)});
    balance[p.turns.turns[t].to].coef.push_back({t, Rat(-1)});
  }
  for (auto& r : balance) lp.rows.push_back(std::move(r));
  for (int t = 0; t < nt; ++t) {
    int u = p.turns.pair_idx[t];
    if (t < u) {
      LPRow r;
      r.rel = Rel::EQ;
      r.rhs = 0;
      r.coef = {{t, Rat(1)}, {u, Rat(-1)}};
      lp.rows.push_back(std::move(r));
    }
  }
  for (int loop = 0; loop < ml.n_loops; ++loop) {
    LPRow r;
    r.rel = Rel::EQ;
    r.rhs = p.arcs.loop_r[loop];
    for (int t = 0; t < nt; ++t)
      if (p.turns.turns[t].from == ml.fixed_arc[loop]) r.coef.push_back({t, Rat(1)});
    lp.rows.push_back(std::move(r));
  }
  for (int t = 0; t < nt; ++t)
    if (costs[t] != 0) lp.objective.push_back({t, costs[t]});

  LPSolution ls = lp_solve(lp);
  if (ls.status == LPStatus::Unbounded) {
    rep.bounded = false;
    return rep;
  }
  if (ls.status != LPStatus::Optimal)
    throw Error(ErrKind::Internal, "turn-usage polytope is empty");
  std::string why;
  if (!lp_verify_optimality(lp, ls, &why))
    throw Error(ErrKind::Internal, "cost bound certificate failed: " + why);
  rep.bounded = true;
  rep.K = ls.objective;
  rep.scl_lower = quarter_arc_total(p) - rep.K / 2;
  return rep;
}

// ---------------------------------------------------------------------------

inline SclResult scl_auto(const Chain& chain, const GroupParams& G,
                          const SolverConfig& cfg = {}) {
  if (cfg.kind == SolverConfig::Kind::Block) return scl_block(chain, G, cfg);
  if (cfg.kind == SolverConfig::Kind::Pieces) {
    if (cfg.max_turns > 0) return scl_pieces(chain, G, cfg.max_turns, cfg);
  } else {
    if (auto pre = scl_precheck(chain, G)) return *pre;
    ArcTable at = build_arc_table(chain);
    WindingContext wc = winding_context(at, G, cfg.encode.dv_hard);
    if (wc.dv_abs <= cfg.block_dv_ceiling) {
      TurnTable tt = enumerate_turns(at, wc, cfg.encode.max_turn_types);
      IntervalAlphabet ia = interval_alphabet(at, tt);
      if (count_cuts(ia) <= cfg.max_cut_vars) return scl_block(chain, G, cfg);
    }
  }
  // Piece solver with an escalating turn bound: doubled while the bound is
  // infeasible, stepped down when a pool overruns the piece budget.
  int bound = cfg.pieces_start;
  bool shrunk = false;
  while (true) {
    SclResult res;
    try {
      res = scl_pieces(chain, G, bound, cfg);
    } catch (const Error& e) {
      if (e.kind != ErrKind::Resource || bound <= 1) throw;
      bound -= 1;
      shrunk = true;
      continue;
    }
    if (!res.infeasible_at_bound) {
      if (res.note.empty())
        res.note = "piece bound " + std::to_string(bound) + ": value is an upper bound";
      return res;
    }
    if (bound >= cfg.pieces_cap || shrunk) return res;  // infeasible at the usable cap
    bound = std::min(bound * 2, cfg.pieces_cap);
  }
}

}  // namespace bsscl
