#pragma once

// Combinatorial encoding of surface pieces over a chain in BS(M,L):
//   * arc table: the a-blocks of all chain words, with loop structure
//   * winding context: the vertex modulus Dv, edge modulus We, and the
//     per-arc winding subgroups W0(a_i)
//   * turn types (a_i, wbar, a_j) with the pairing involution and their
//     winding contributions
//   * the unit-interval alphabet on the vertex circle and the cut variables
//     of the literal block linear program

#include "rational.hpp"
#include "words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace bsscl {

// ---------------------------------------------------------------------------
// Flattened arcs of a chain.

struct ArcEntry {
  Int winding;      // a-block exponent
  int eps_in = 0;   // t-letter entering the arc
  int eps_out = 0;  // t-letter leaving the arc
  int mu = 0, lambda = 0;
  int loop = 0;     // chain term index
  int next = 0, prev = 0;  // neighbours within the loop (global arc ids)
};

struct ArcTable {
  std::vector<ArcEntry> arcs;
  std::vector<int> loop_first;   // global id of each loop's first arc
  std::vector<int> loop_count;   // arcs per loop (A_i)
  std::vector<Rat> loop_r;       // chain coefficients
  std::vector<Int> loop_h;
  int rho = 0;                   // max over loops of per-word rho
  int size() const { return static_cast<int>(arcs.size()); }
};

inline ArcTable build_arc_table(const Chain& c) {
  ArcTable at;
  for (size_t li = 0; li < c.terms.size(); ++li) {
    const TightWord& w = c.terms[li].word;
    auto was = word_arcs(w);
    int base = at.size();
    int n = static_cast<int>(was.size());
    at.loop_first.push_back(base);
    at.loop_count.push_back(n);
    at.loop_r.push_back(c.terms[li].r);
    at.loop_h.push_back(h_value(w));
    for (int i = 0; i < n; ++i) {
      ArcEntry e;
      e.winding = was[i].winding;
      e.eps_in = was[i].eps_in;
      e.eps_out = was[i].eps_out;
      e.mu = was[i].mu;
      e.lambda = was[i].lambda;
      e.loop = static_cast<int>(li);
      e.next = base + (i + 1) % n;
      e.prev = base + (i + n - 1) % n;
      at.arcs.push_back(std::move(e));
    }
    at.rho = std::max(at.rho, word_complexity(w).rho);
  }
  return at;
}

// ---------------------------------------------------------------------------
// Winding context.

struct WindingContext {
  GroupParams G;
  int rho = 0;
  Int dv_abs;           // d |m|^rho |l|^rho, modulus at the vertex
  Int we_mod;           // |m|^rho |l|^rho, modulus at the edge
  std::vector<Int> w0;  // positive generator of W0(a_i) per arc
};

inline WindingContext winding_context(const ArcTable& at, const GroupParams& G,
                                      const Int& dv_hard_limit = (Int(1) << 40)) {
  WindingContext ctx;
  ctx.G = G;
  ctx.rho = at.rho;
  Int am = G.m < 0 ? -G.m : G.m;
  Int al = G.l < 0 ? -G.l : G.l;
  auto ipow = [](Int b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  ctx.we_mod = ipow(am, ctx.rho) * ipow(al, ctx.rho);
  ctx.dv_abs = Int(G.d) * ctx.we_mod;
  if (ctx.dv_abs > dv_hard_limit)
    throw Error(ErrKind::Resource, "vertex modulus " + ctx.dv_abs.str() + " exceeds limit");
  Int lc = 1;
  for (auto& a : at.arcs) {
    Int habs = int_abs(at.loop_h[a.loop]);
    int h = static_cast<int>(habs);
    int x, y;
    if (at.loop_h[a.loop] >= 0) {
      x = a.mu - h;
      y = a.lambda;
    } else {
      x = a.mu;
      y = a.lambda - h;
    }
    if (x < 0 || y < 0) throw Error(ErrKind::Internal, "negative winding exponent");
    ctx.w0.push_back(Int(G.d) * ipow(am, x) * ipow(al, y));
    lc = int_lcm(lc, ctx.w0.back());
  }
  if (!at.arcs.empty() && lc != ctx.dv_abs)
    throw Error(ErrKind::Internal, "winding subgroup lcm disagrees with vertex modulus");
  return ctx;
}

// ---------------------------------------------------------------------------
// Turn types.  A turn (a_i, wbar, a_j) glues the strip after arc a_i to the
// strip before arc a_j; it exists iff eps_out(a_i) = -eps_in(a_j), and wbar
// ranges over residues mod We.  The pairing involution matches it with
// (prev(a_j), -wbar, next(a_i)) on the far side of the edge.

struct TurnType {
  int from = 0, to = 0;
  long long wcls = 0;  // class in [0, We)
};

struct TurnTable {
  long long dv = 1, we = 1;
  std::vector<TurnType> turns;
  std::vector<int> pair_idx;
  std::vector<long long> contrib;     // iota(wbar) mod dv
  std::vector<long long> delta;       // (w(to) + contrib) mod dv
  std::vector<long long> arc_w_mod;   // per arc, winding mod dv
  std::vector<long long> arc_w0;      // per arc, generator of W0(a_i); divides dv
  std::vector<std::vector<int>> out_of_arc;  // turn ids with from == a
  std::vector<std::pair<int, int>> arc_pairs;
  std::map<std::pair<int, int>, int> pair_base;  // (from,to) -> first turn id

  int size() const { return static_cast<int>(turns.size()); }
  int index_of(int from, int to, long long wcls) const {
    auto it = pair_base.find({from, to});
    if (it == pair_base.end()) return -1;
    return it->second + static_cast<int>(wcls);
  }
};

inline TurnTable enumerate_turns(const ArcTable& at, const WindingContext& ctx,
                                 long long max_turn_types = 2'000'000) {
  TurnTable tt;
  if (ctx.dv_abs > (Int(1) << 31))
    throw Error(ErrKind::Resource, "vertex modulus too large for turn enumeration");
  tt.dv = to_ll(ctx.dv_abs);
  tt.we = to_ll(ctx.we_mod);
  int n = at.size();
  for (int a = 0; a < n; ++a) tt.arc_w_mod.push_back(to_ll(mod_pos(at.arcs[a].winding, ctx.dv_abs)));
  for (int a = 0; a < n; ++a) tt.arc_w0.push_back(to_ll(ctx.w0[a]));
  tt.out_of_arc.assign(n, {});
  long long count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (at.arcs[i].eps_out != -at.arcs[j].eps_in) continue;
      count += tt.we;
      if (count > max_turn_types)
        throw Error(ErrKind::Resource, "turn type count exceeds limit");
      tt.arc_pairs.push_back({i, j});
      tt.pair_base[{i, j}] = tt.size();
      long long mult = (at.arcs[i].eps_out == 1) ? ctx.G.M : ctx.G.L;
      for (long long w = 0; w < tt.we; ++w) {
        TurnType t{i, j, w};
        tt.turns.push_back(t);
        tt.out_of_arc[i].push_back(tt.size() - 1);
        long long c = to_ll(mod_pos(Int(mult) * Int(w), ctx.dv_abs));
        tt.contrib.push_back(c);
        tt.delta.push_back((tt.arc_w_mod[j] + c) % tt.dv);
      }
    }
  tt.pair_idx.assign(tt.size(), -1);
  for (int t = 0; t < tt.size(); ++t) {
    const TurnType& tn = tt.turns[t];
    int pf = at.arcs[tn.to].prev;
    int pt = at.arcs[tn.from].next;
    long long pw = (tt.we - tn.wcls) % tt.we;
    int p = tt.index_of(pf, pt, pw);
    if (p < 0) throw Error(ErrKind::Internal, "paired turn type missing");
    tt.pair_idx[t] = p;
  }
  for (int t = 0; t < tt.size(); ++t)
    if (tt.pair_idx[tt.pair_idx[t]] != t || tt.pair_idx[t] == t)
      throw Error(ErrKind::Internal, "turn pairing is not a fixed-point-free involution");
  return tt;
}

inline long long turn_contribution(const TurnTable& tt, int turn_id) { return tt.contrib[turn_id]; }

// Turn multisets (piece boundaries) as sorted (turn id, count) lists.
using TurnMultiset = std::vector<std::pair<int, int>>;

inline long long piece_winding(const TurnTable& tt, const TurnMultiset& piece) {
  long long w = 0;
  for (auto& [t, c] : piece) w = (w + tt.delta[t] % tt.dv * (c % tt.dv)) % tt.dv;
  return w;
}

// Disk-like: nonempty, in/out balanced at every arc, connected support, and
// total winding inside the subgroup W0(a_i) of some arc a_i of the support
// (any such arc can absorb the winding into its strip).
inline bool is_disklike(const ArcTable& at, const TurnTable& tt, const TurnMultiset& piece) {
  if (piece.empty()) return false;
  int n = at.size();
  std::vector<long long> bal(n, 0);
  std::vector<int> uf(n);
  for (int i = 0; i < n; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (auto& [t, c] : piece) {
    if (c <= 0) return false;
    bal[tt.turns[t].from] += c;
    bal[tt.turns[t].to] -= c;
    uf[find(tt.turns[t].from)] = find(tt.turns[t].to);
  }
  int root = -1;
  for (int i = 0; i < n; ++i) {
    if (bal[i] != 0) return false;
    bool used = false;
    for (auto& [t, c] : piece)
      if (tt.turns[t].from == i || tt.turns[t].to == i) used = true;
    if (used) {
      if (root == -1) root = find(i);
      else if (find(i) != root) return false;
    }
  }
  long long wind = piece_winding(tt, piece);
  for (int i = 0; i < n; ++i) {
    bool used = false;
    for (auto& [t, c] : piece)
      if (tt.turns[t].from == i || tt.turns[t].to == i) used = true;
    if (used && wind % tt.arc_w0[i] == 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Problem bundle: everything downstream solvers need.

struct EncodeLimits {
  Int dv_hard = Int(1) << 40;
  long long max_turn_types = 2'000'000;
};

struct Problem {
  GroupParams G;
  Chain chain;
  ArcTable arcs;
  WindingContext wc;
  TurnTable turns;
};

inline Problem build_problem(const Chain& chain, const GroupParams& G,
                             const EncodeLimits& lim = {}) {
  Problem p;
  p.G = G;
  p.chain = chain;
  p.arcs = build_arc_table(chain);
  p.wc = winding_context(p.arcs, G, lim.dv_hard);
  p.turns = enumerate_turns(p.arcs, p.wc, lim.max_turn_types);
  return p;
}

// ---------------------------------------------------------------------------
// Unit-interval alphabet at the vertex.  Each arc and each turn type occupies
// a band of unit intervals on the vertex circle; band lengths are the winding
// (resp. contribution) reduced to {1, ..., dv}.  Interval endpoints ("points")
// drive the consecutive-interval relation.

struct IntervalAlphabet {
  long long dv = 1;
  int n_arcs = 0, n_turns = 0;
  std::vector<long long> host_len;   // hosts: arcs first, then turns
  std::vector<long long> host_base;  // first interval id of each host
  long long total = 0;               // number of intervals
  long long n_points = 0;

  // Point ids: internal points of each host, then P_dep(arc), P_arr(arc).
  std::vector<long long> point_base;  // internal-point base per host
  long long dep_base = 0, arr_base = 0;

  const TurnTable* tt = nullptr;

  int host_of(long long I) const {
    int lo = 0, hi = static_cast<int>(host_len.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (host_base[mid] <= I) lo = mid;
      else hi = mid - 1;
    }
    return lo;
  }
  long long pos_of(long long I) const { return I - host_base[host_of(I)] + 1; }
  long long first_of_host(int h) const { return host_base[h]; }
  long long last_of_host(int h) const { return host_base[h] + host_len[h] - 1; }
  long long first_of_arc(int a) const { return first_of_host(a); }
  long long last_of_arc(int a) const { return last_of_host(a); }
  long long first_of_turn(int t) const { return first_of_host(n_arcs + t); }
  long long last_of_turn(int t) const { return last_of_host(n_arcs + t); }

  long long point_after(long long I) const {
    int h = host_of(I);
    long long pos = I - host_base[h] + 1;
    if (pos < host_len[h]) return point_base[h] + pos - 1;
    if (h < n_arcs) return dep_base + h;           // after an arc: departure point
    return arr_base + tt->turns[h - n_arcs].to;    // after a turn: arrival at target
  }
  long long point_before(long long I) const {
    int h = host_of(I);
    long long pos = I - host_base[h] + 1;
    if (pos > 1) return point_base[h] + pos - 2;
    if (h < n_arcs) return arr_base + h;           // before an arc: its arrival point
    return dep_base + tt->turns[h - n_arcs].from;  // before a turn: departure of source
  }
  bool consecutive(long long I, long long J) const { return point_after(I) == point_before(J); }

  template <class Fn>
  void for_succs(long long I, Fn fn) const {
    long long p = point_after(I);
    for_starting_at_point(p, fn);
  }
  template <class Fn>
  void for_preds(long long J, Fn fn) const {
    long long p = point_before(J);
    for_ending_at_point(p, fn);
  }
  template <class Fn>
  void for_starting_at_point(long long p, Fn fn) const {
    // intervals J with point_before(J) == p
    if (p >= arr_base) {
      fn(first_of_arc(static_cast<int>(p - arr_base)));
      return;
    }
    if (p >= dep_base) {
      int a = static_cast<int>(p - dep_base);
      for (int t : tt->out_of_arc[a]) fn(first_of_turn(t));
      return;
    }
    int h = host_of_point(p);
    fn(host_base[h] + (p - point_base[h]) + 1);
  }
  template <class Fn>
  void for_ending_at_point(long long p, Fn fn) const {
    // intervals I with point_after(I) == p
    if (p >= arr_base) {
      int a = static_cast<int>(p - arr_base);
      for (int t = 0; t < n_turns; ++t)
        if (tt->turns[t].to == a) fn(last_of_turn(t));
      return;
    }
    if (p >= dep_base) {
      fn(last_of_arc(static_cast<int>(p - dep_base)));
      return;
    }
    int h = host_of_point(p);
    fn(host_base[h] + (p - point_base[h]));
  }

 private:
  int host_of_point(long long p) const {
    int lo = 0, hi = static_cast<int>(point_base.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (point_base[mid] <= p) lo = mid;
      else hi = mid - 1;
    }
    return lo;
  }
};

inline IntervalAlphabet interval_alphabet(const ArcTable& at, const TurnTable& tt) {
  IntervalAlphabet ia;
  ia.dv = tt.dv;
  ia.n_arcs = at.size();
  ia.n_turns = tt.size();
  ia.tt = &tt;
  auto rep1 = [&](long long x) {  // representative of x mod dv in {1..dv}
    long long r = ((x % ia.dv) + ia.dv) % ia.dv;
    return r == 0 ? ia.dv : r;
  };
  for (int a = 0; a < ia.n_arcs; ++a) ia.host_len.push_back(rep1(tt.arc_w_mod[a]));
  for (int t = 0; t < ia.n_turns; ++t) ia.host_len.push_back(rep1(tt.contrib[t]));
  long long acc = 0, pacc = 0;
  for (auto len : ia.host_len) {
    ia.host_base.push_back(acc);
    ia.point_base.push_back(pacc);
    acc += len;
    pacc += len - 1;
  }
  ia.total = acc;
  ia.dep_base = pacc;
  ia.arr_base = pacc + ia.n_arcs;
  ia.n_points = pacc + 2ll * ia.n_arcs;
  return ia;
}

// ---------------------------------------------------------------------------
// Cut variables of the literal block LP.  A block of D = dv consecutive unit
// intervals is described through its cuts (I_b, I_k, I_{k+1}, k, genuine):
//   * k = 1 forces I_1 = I_b, k = D forces I_{D+1} = I_b;
//   * dummy junctions require consecutive(I_k, I_{k+1});
//   * genuine junctions only occur at k = 1 or k = D.

struct CutVar {
  long long Ib, Ik, Ik1;
  long long k;
  bool genuine;
};

inline long long count_cuts(const IntervalAlphabet& ia) {
  long long consec = 0;
  for (long long I = 0; I < ia.total; ++I) {
    long long c = 0;
    ia.for_succs(I, [&](long long) { ++c; });
    consec += c;
  }
  long long N = ia.total;
  if (ia.dv == 1) return N;
  return 2 * (consec + N * N) + (ia.dv - 2) * N * consec;
}

inline std::vector<CutVar> generate_cuts(const IntervalAlphabet& ia,
                                         long long max_cuts = 2'000'000) {
  long long expect = count_cuts(ia);
  if (expect > max_cuts)
    throw Error(ErrKind::Resource,
                "cut variable count " + std::to_string(expect) + " exceeds limit " +
                    std::to_string(max_cuts));
  std::vector<CutVar> cuts;
  cuts.reserve(static_cast<size_t>(expect));
  long long D = ia.dv;
  if (D == 1) {
    for (long long I = 0; I < ia.total; ++I) cuts.push_back({I, I, I, 1, true});
    return cuts;
  }
  for (long long I = 0; I < ia.total; ++I) {
    ia.for_succs(I, [&](long long J) { cuts.push_back({I, I, J, 1, false}); });
    for (long long J = 0; J < ia.total; ++J) cuts.push_back({I, I, J, 1, true});
  }
  for (long long Ib = 0; Ib < ia.total; ++Ib) {
    ia.for_preds(Ib, [&](long long I) { cuts.push_back({Ib, I, Ib, D, false}); });
    for (long long I = 0; I < ia.total; ++I) cuts.push_back({Ib, I, Ib, D, true});
  }
  for (long long k = 2; k < D; ++k)
    for (long long Ib = 0; Ib < ia.total; ++Ib)
      for (long long I = 0; I < ia.total; ++I)
        ia.for_succs(I, [&](long long J) { cuts.push_back({Ib, I, J, k, false}); });
  return cuts;
}

}  // namespace bsscl
