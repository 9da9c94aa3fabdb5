#pragma once

// Piece-enumeration solver: list the minimal disk-like pieces whose boundary
// uses a bounded number of distinct turn types, then maximize the number of
// pieces assembled into an admissible surface by exact LP (with sifting when
// the column pool is large).

#include "result.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace bsscl {

// Enumerate the minimal disk-like pieces with at most max_turns distinct turn
// types.  A piece is a positive integer circulation on the turn-type
// multigraph (nodes: arcs, parallel edges: the residue classes of an arc
// pair); disk-like means connected support plus total winding in W0(a_i) for
// some arc of the support.  Minimal means no smaller disk-like piece fits
// inside componentwise.  Dropping dominated pieces loses nothing: the excess
// over an inner piece is again a circulation, every cycle of which has a
// disk-like multiple, so any assembly using the big piece is matched by one
// using only minimal pieces; and against nonnegative turn costs the dominated
// piece is at least as expensive as the inner one.
//
// The walk goes support-first by increasing type count: fix how many classes
// each arc-pair edge carries, keep supports forming a single strongly
// connected patch, choose classes (skipping any choice that swallows an
// already-found all-ones piece), then search multiplicities as sums of simple
// cycles, pruning branches dominated by known pieces.
template <class Fn>
inline void enumerate_disklike_pieces(const Problem& p, int max_turns, long long max_pieces,
                                      Fn&& emit) {
  const auto& tt = p.turns;
  int n_arcs = p.arcs.size();
  int n_pairs = static_cast<int>(tt.arc_pairs.size());
  if (max_turns > 24) throw Error(ErrKind::Resource, "piece bound too large");
  long long emitted = 0, steps = 0;
  const long long step_cap = max_pieces * 64;
  auto spend = [&](long long k) {
    steps += k;
    if (steps > step_cap) throw Error(ErrKind::Resource, "piece enumeration exceeds limit");
  };

  // minimal pieces found so far, keyed by support (increasing type ids);
  // supports of full size are never consulted again and are not stored
  std::map<std::vector<int>, std::vector<std::vector<long long>>> store;
  // supports of all-ones pieces, indexed by their largest type id
  std::map<int, std::vector<std::vector<int>>> blockers;

  std::vector<int> types;  // chosen type ids, increasing
  std::vector<char> chosen(tt.size(), 0);
  std::vector<int> ncls(n_pairs, 0);

  auto blocked_with = [&](int t) {
    auto it = blockers.find(t);
    if (it == blockers.end()) return false;
    for (const auto& B : it->second) {
      bool sub = true;
      for (size_t i = 0; i + 1 < B.size() && sub; ++i) sub = chosen[B[i]] != 0;
      if (sub) return true;
    }
    return false;
  };

  // ---- multiplicity search over a fixed support ----
  auto process_support = [&]() {
    int k = static_cast<int>(types.size());
    std::vector<int> arcs;
    for (int t : types) {
      arcs.push_back(tt.turns[t].from);
      arcs.push_back(tt.turns[t].to);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    int na = static_cast<int>(arcs.size());
    auto aidx = [&](int a) {
      return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
    };
    std::vector<std::vector<std::pair<int, int>>> adj(na);  // (type index, target arc)
    for (int i = 0; i < k; ++i)
      adj[aidx(tt.turns[types[i]].from)].push_back({i, aidx(tt.turns[types[i]].to)});

    // simple directed cycles, each reported from its smallest arc
    std::vector<std::vector<int>> cycles;
    std::vector<unsigned> cyc_mask;
    std::vector<long long> cyc_wind;
    std::vector<char> onpath(na, 0);
    std::vector<int> path;
    std::function<void(int, int)> walk = [&](int start, int cur) {
      spend(1);
      for (auto [ti, nxt] : adj[cur]) {
        if (nxt == start) {
          path.push_back(ti);
          cycles.push_back(path);
          unsigned m = 0;
          long long w = 0;
          for (int s : path) {
            m |= 1u << s;
            w = (w + tt.delta[types[s]]) % tt.dv;
          }
          cyc_mask.push_back(m);
          cyc_wind.push_back(w);
          path.pop_back();
          continue;
        }
        if (nxt < start || onpath[nxt]) continue;
        onpath[nxt] = 1;
        path.push_back(ti);
        walk(start, nxt);
        path.pop_back();
        onpath[nxt] = 0;
      }
    };
    for (int s = 0; s < na; ++s) {
      onpath[s] = 1;
      walk(s, s);
      onpath[s] = 0;
    }
    int q = static_cast<int>(cycles.size());
    if (q > 64) throw Error(ErrKind::Resource, "piece cycle count exceeds limit");

    unsigned full = (1u << k) - 1;
    std::vector<unsigned> suffix(q + 1, 0);
    for (int i = q - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | cyc_mask[i];
    if (suffix[0] != full) return;  // some type lies on no cycle

    std::vector<long long> mods;
    for (int a : arcs) mods.push_back(tt.arc_w0[a]);
    std::sort(mods.begin(), mods.end());
    mods.erase(std::unique(mods.begin(), mods.end()), mods.end());

    // pieces on sub-supports, aligned to the local type order
    std::vector<std::vector<long long>> doms;
    std::vector<int> key;
    for (unsigned sub = 1; sub + 1 < (1u << k); ++sub) {
      key.clear();
      for (int i = 0; i < k; ++i)
        if (sub >> i & 1) key.push_back(types[i]);
      auto it = store.find(key);
      if (it == store.end()) continue;
      for (const auto& m : it->second) {
        std::vector<long long> v(k, 0);
        int j = 0;
        for (int i = 0; i < k; ++i)
          if (sub >> i & 1) v[i] = m[j++];
        doms.push_back(std::move(v));
      }
    }

    std::vector<std::vector<long long>> found;
    std::vector<long long> x(k, 0);
    auto dominated = [&](const std::vector<long long>& v) {
      auto leq = [&](const std::vector<long long>& y) {
        for (int i = 0; i < k; ++i)
          if (y[i] > v[i]) return false;
        return true;
      };
      for (const auto& y : doms)
        if (leq(y)) return true;
      for (const auto& y : found)
        if (leq(y)) return true;
      return false;
    };

    std::function<void(int, unsigned, long long)> assign = [&](int ci, unsigned covered,
                                                               long long wind) {
      if ((full & ~(covered | suffix[ci])) != 0) return;
      if (ci == q) {
        spend(1);
        for (long long m : mods)
          if (wind % m == 0) {
            found.push_back(x);
            return;
          }
        return;
      }
      assign(ci + 1, covered, wind);
      long long w = wind;
      for (long long lam = 1; lam <= tt.dv; ++lam) {
        spend(1);
        for (int s : cycles[ci]) ++x[s];
        w = (w + cyc_wind[ci]) % tt.dv;
        if (dominated(x)) {
          for (int s : cycles[ci]) x[s] -= lam;
          return;
        }
        size_t before = found.size();
        assign(ci + 1, covered | cyc_mask[ci], w);
        if (ci == q - 1 && found.size() > before) {
          for (int s : cycles[ci]) x[s] -= lam;
          return;
        }
      }
      for (int s : cycles[ci]) x[s] -= tt.dv;
    };
    assign(0, 0, 0);

    if (found.empty()) return;
    std::sort(found.begin(), found.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                long long sa = 0, sb = 0;
                for (auto v : a) sa += v;
                for (auto v : b) sb += v;
                return sa != sb ? sa < sb : a < b;
              });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<std::vector<long long>> kept;
    for (const auto& v : found) {
      bool dom = false;
      for (const auto& y : kept) {
        bool leq = true;
        for (int i = 0; i < k && leq; ++i) leq = y[i] <= v[i];
        if (leq) {
          dom = true;
          break;
        }
      }
      if (dom) continue;
      kept.push_back(v);
      if (++emitted > max_pieces)
        throw Error(ErrKind::Resource, "piece enumeration exceeds limit");
      TurnMultiset piece;
      for (int i = 0; i < k; ++i) piece.push_back({types[i], static_cast<int>(v[i])});
      emit(piece);
    }
    if (k < max_turns) {
      store[types] = kept;
      for (const auto& v : kept)
        if (std::all_of(v.begin(), v.end(), [](long long c) { return c == 1; })) {
          blockers[types.back()].push_back(types);
          break;
        }
    }
  };

  // ---- support shapes: distinct-class counts per arc-pair edge ----
  auto support_ok = [&]() {
    std::vector<char> used(n_arcs, 0);
    std::vector<std::vector<int>> succ(n_arcs);
    for (int e = 0; e < n_pairs; ++e) {
      if (ncls[e] == 0) continue;
      auto [i, j] = tt.arc_pairs[e];
      used[i] = used[j] = 1;
      succ[i].push_back(j);
    }
    // reachability closure over the support
    std::vector<std::vector<char>> reach(n_arcs, std::vector<char>(n_arcs, 0));
    for (int a = 0; a < n_arcs; ++a) {
      if (!used[a]) continue;
      std::vector<int> stack{a};
      reach[a][a] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : succ[u])
          if (!reach[a][v]) {
            reach[a][v] = 1;
            stack.push_back(v);
          }
      }
    }
    int root = -1;
    for (int a = 0; a < n_arcs; ++a) {
      if (!used[a]) continue;
      if (root == -1) root = a;
      if (!reach[a][root] || !reach[root][a]) return false;
    }
    return root != -1;
  };

  std::function<void(int)> pick_classes = [&](int e) {
    while (e < n_pairs && ncls[e] == 0) ++e;
    if (e == n_pairs) {
      process_support();
      return;
    }
    int base = tt.pair_base.at(tt.arc_pairs[e]);
    int n = ncls[e];
    std::function<void(int, long long)> choose = [&](int got, long long minw) {
      spend(1);
      if (got == n) {
        pick_classes(e + 1);
        return;
      }
      for (long long w = minw; w + (n - got) <= tt.we; ++w) {
        int t = base + static_cast<int>(w);
        if (blocked_with(t)) continue;
        chosen[t] = 1;
        types.push_back(t);
        choose(got + 1, w + 1);
        types.pop_back();
        chosen[t] = 0;
      }
    };
    choose(0, 0);
  };

  std::function<void(int, int)> shape = [&](int e, int remaining) {
    if (e == n_pairs) {
      if (remaining == 0 && support_ok()) pick_classes(0);
      return;
    }
    long long cap = std::min<long long>(remaining, tt.we);
    for (int n = 0; n <= cap; ++n) {
      ncls[e] = n;
      shape(e + 1, remaining - n);
    }
    ncls[e] = 0;
  };
  for (int b = 1; b <= max_turns; ++b) shape(0, b);
}

inline std::vector<TurnMultiset> list_disklike_pieces(const Problem& p, int max_turns,
                                                      long long max_pieces = 5'000'000) {
  std::vector<TurnMultiset> out;
  enumerate_disklike_pieces(p, max_turns, max_pieces,
                            [&](const TurnMultiset& m) { out.push_back(m); });
  return out;
}

// ---------------------------------------------------------------------------

inline SclResult scl_pieces(const Chain& chain, const GroupParams& G, int max_turns,
                            const SolverConfig& cfg = {}) {
  if (auto pre = scl_precheck(chain, G)) return *pre;
  Problem p = build_problem(chain, G, cfg.encode);

  SclResult res;
  res.solver = "pieces";
  res.rho = p.wc.rho;
  res.dv_abs = p.wc.dv_abs;
  res.dropped_elliptic = chain.dropped_elliptic;
  res.note = homology_check(chain, G).note;
  res.bound_used = max_turns;

  auto pieces = list_disklike_pieces(p, max_turns, cfg.max_pieces);
  MasterLayout ml = master_layout(p);
  auto rows = master_rows(p, ml);

  std::vector<std::vector<std::pair<int, Rat>>> cols(pieces.size());
  std::vector<std::vector<std::pair<int, double>>> cols_f(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    cols[i] = master_column(p, ml, pieces[i]);
    for (auto& [r, v] : cols[i]) cols_f[i].push_back({r, v.convert_to<double>()});
  }

  LPModel base;
  base.nvars = 0;
  base.maximize = true;
  base.rows = rows;
  Simplex s(base);
  res.lp.constraints = static_cast<long long>(rows.size());

  std::vector<int> active;      // piece index per structural var
  std::vector<bool> in_active(pieces.size(), false);
  auto add_piece = [&](size_t i) {
    s.add_column(cols[i], Rat(1));
    active.push_back(static_cast<int>(i));
    in_active[i] = true;
  };

  const size_t direct_cap = 4000;
  if (pieces.size() <= direct_cap) {
    for (size_t i = 0; i < pieces.size(); ++i) add_piece(i);
  } else {
    // seed: smallest piece through every turn type
    std::vector<int> best(p.turns.size(), -1);
    for (size_t i = 0; i < pieces.size(); ++i)
      for (auto& [t, c] : pieces[i]) {
        if (best[t] < 0 || pieces[i].size() < pieces[best[t]].size())
          best[t] = static_cast<int>(i);
      }
    for (int t = 0; t < p.turns.size(); ++t)
      if (best[t] >= 0 && !in_active[best[t]]) add_piece(best[t]);

    // Floating-point presolve: converge the sifting in doubles first (cheap
    // rounds), then hand its supported columns to the exact solver so the
    // exact loop starts next to the answer and only settles.
    FloatSimplex fs(rows, true);
    std::vector<int> factive;
    std::vector<bool> fin(pieces.size(), false);
    auto fadd = [&](size_t i) {
      fs.add_column(cols_f[i], 1.0);
      factive.push_back(static_cast<int>(i));
      fin[i] = true;
    };
    for (int i : active) fadd(i);
    bool fok = true;
    const size_t fgrab = 200, fcap = 20000;
    for (int round = 0; round < 400 && fok; ++round) {
      LPStatus st = fs.solve();
      if (!fs.reliable() || st == LPStatus::Unbounded) {
        fok = false;
        break;
      }
      auto y = fs.prices();
      std::vector<std::pair<double, size_t>> cand;
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (fin[i]) continue;
        double v = 0;
        for (auto& [r, c] : cols_f[i]) v += y[r] * c;
        if (st == LPStatus::Optimal ? v < 1 - 1e-7 : v > 1e-7) cand.push_back({v, i});
      }
      if (cand.empty()) break;
      std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
        return st == LPStatus::Optimal ? a.first < b.first : a.first > b.first;
      });
      for (size_t k = 0; k < std::min(cand.size(), fgrab); ++k) fadd(cand[k].second);
      if (factive.size() > fcap) break;
    }
    if (fok) {
      auto xf = fs.primal();
      for (size_t v = 0; v < factive.size(); ++v)
        if (xf[v] > 1e-9 && !in_active[factive[v]]) add_piece(factive[v]);
    }
  }

  // Pricing: a floating-point pass orders the pool, exact arithmetic confirms
  // candidates; optimality (or infeasibility) is only declared after a full
  // exact scan finds nothing, so the float pass is a heuristic filter only.
  const size_t round_take = 100;
  while (true) {
    LPStatus st = s.solve();
    if (st == LPStatus::Unbounded) throw Error(ErrKind::Internal, "piece master unbounded");
    std::vector<Rat> price = st == LPStatus::Optimal ? s.duals() : s.farkas();
    std::vector<double> price_f(price.size());
    for (size_t r = 0; r < price.size(); ++r) price_f[r] = price[r].convert_to<double>();
    // exact reduced-cost test: wants y.a < 1 at an optimum, z.a > 0 under Farkas
    auto attractive = [&](size_t i, Rat* out) {
      Rat v = 0;
      for (auto& [r, c] : cols[i]) v += price[r] * c;
      if (out) *out = v;
      return st == LPStatus::Optimal ? v < 1 : v > 0;
    };
    std::vector<std::pair<double, size_t>> guess;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (in_active[i]) continue;
      double v = 0;
      for (auto& [r, c] : cols_f[i]) v += price_f[r] * c;
      if (st == LPStatus::Optimal ? v < 1 + 1e-6 : v > -1e-6) guess.push_back({v, i});
    }
    std::sort(guess.begin(), guess.end(), [&](const auto& a, const auto& b) {
      return st == LPStatus::Optimal ? a.first < b.first : a.first > b.first;
    });
    size_t added = 0;
    for (auto& [v, i] : guess) {
      if (added >= round_take) break;
      if (attractive(i, nullptr)) {
        add_piece(i);
        ++added;
      }
    }
    if (added > 0) continue;
    // float pass found nothing genuine: settle with a full exact scan
    std::vector<std::pair<Rat, size_t>> cand;
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (in_active[i]) continue;
      Rat v;
      if (attractive(i, &v)) cand.push_back({v, i});
    }
    if (cand.empty()) {
      if (st == LPStatus::Optimal) break;
      res.infeasible_at_bound = true;
      res.lp.vars = static_cast<long long>(active.size());
      res.lp.pivots = s.pivots();
      return res;
    }
    std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
      return st == LPStatus::Optimal ? a.first < b.first : a.first > b.first;
    });
    for (size_t k = 0; k < std::min(cand.size(), round_take); ++k) add_piece(cand[k].second);
  }

  Rat kappa = s.objective();
  res.value = quarter_arc_total(p) - kappa / 2;
  res.lp.vars = static_cast<long long>(active.size());
  res.lp.pivots = s.pivots();

  auto x = s.primal();
  auto sol = std::make_shared<PieceSolution>();
  sol->kappa = kappa;
  for (size_t v = 0; v < active.size(); ++v)
    if (x[v] > 0) {
      sol->pieces.push_back(pieces[active[v]]);
      sol->weights.push_back(x[v]);
    }
  res.pieces = sol;

  if (cfg.verify) {
    LPModel full;
    full.nvars = static_cast<int>(active.size());
    full.maximize = true;
    full.rows = rows;
    for (size_t v = 0; v < active.size(); ++v) {
      full.objective.push_back({static_cast<int>(v), Rat(1)});
      for (auto& [r, val] : cols[active[v]]) full.rows[r].coef.push_back({static_cast<int>(v), val});
    }
    LPSolution ls;
    ls.status = LPStatus::Optimal;
    ls.objective = kappa;
    ls.x = x;
    ls.y = s.duals();
    std::string why;
    res.certified = lp_verify_optimality(full, ls, &why);
    if (!res.certified) throw Error(ErrKind::Internal, "piece master certificate failed: " + why);
  }
  return res;
}

}  // namespace bsscl
