#pragma once

// JSON serialization for results, surfaces, extremal verdicts, and sweeps,
// plus the parser for duality cost tables.

#include "extremal.hpp"
#include "sweep.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace bsscl {

using nlohmann::json;

inline json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline json json_rat(const Rat& r) {
  return json{{"num", json_int(rat_num(r))}, {"den", json_int(rat_den(r))}};
}

inline json surface_json(const SurfaceExport& se, const Problem& p) {
  json pieces = json::array();
  for (size_t i = 0; i < se.pieces.size(); ++i) {
    json turns = json::array();
    for (auto& [t, c] : se.pieces[i]) {
      const TurnType& tt = p.turns.turns[t];
      turns.push_back(json{{"from", tt.from + 1},
                           {"to", tt.to + 1},
                           {"wclass", tt.wcls},
                           {"count", c}});
    }
    pieces.push_back(json{{"turns", turns}, {"multiplicity", json_int(se.multiplicity[i])}});
  }
  return json{{"degree", json_int(se.degree)},
              {"pieces", pieces},
              {"piece_count", json_int(se.piece_count)},
              {"total_turns", json_int(se.total_turns)},
              {"minus_chi_hat", json_rat(se.minus_chi_hat)},
              {"consistent", se.consistent}};
}

inline json extremal_json(const ExtremalVerdict& ev) {
  json out;
  out["status"] = ev.status == ExtremalVerdict::Status::Exists ? "exists" : "unknown";
  out["reasons"] = ev.reasons;
  if (ev.surface_built) {
    json comps = json::array();
    for (int c = 0; c < ev.surface.n_components; ++c) {
      json comp{{"balanced", static_cast<bool>(ev.surface.balanced[c])}};
      if (ev.surface.balanced[c]) comp["s_value"] = json_rat(ev.surface.s_component[c]);
      comps.push_back(comp);
    }
    out["surface"] = json{{"pieces", ev.surface.n_pieces}, {"components", comps}};
  }
  if (ev.status == ExtremalVerdict::Status::Exists) {
    out["delta"] = json_rat(ev.delta);
    json w = json::array();
    for (auto& x : ev.weights) w.push_back(json_rat(x));
    out["weights"] = w;
  }
  return out;
}

inline json result_json(const GroupParams& G, const Chain& chain, const SclResult& res,
                        long long timing_ms, const ExtremalVerdict* extremal = nullptr) {
  json out;
  out["group"] = json{{"M", json_int(G.M)},
                      {"L", json_int(G.L)},
                      {"d", json_int(G.d)},
                      {"m", json_int(G.m)},
                      {"l", json_int(G.l)}};
  out["chain"] = chain_str(chain);
  out["rho"] = res.rho;
  out["Dv"] = json_int(res.dv_abs);
  if (res.defined) out["scl"] = json_rat(res.value);
  out["defined"] = res.defined;
  out["solver"] = res.solver;
  out["lp"] = json{{"vars", res.lp.vars},
                   {"constraints", res.lp.constraints},
                   {"pivots", res.lp.pivots}};
  out["dropped_elliptic"] = res.dropped_elliptic;
  out["certified"] = res.certified;
  if (!res.note.empty()) out["note"] = res.note;
  if (extremal) out["extremal"] = extremal_json(*extremal);
  out["timing_ms"] = timing_ms;
  return out;
}

inline json sweep_json(const SweepReport& rep) {
  json rows = json::array();
  for (auto& r : rep.rows) {
    json row{{"d", r.d}, {"M", r.M}, {"L", r.L}, {"millis", r.millis}};
    if (r.ok) {
      row["scl"] = json_rat(r.value);
      row["solver"] = r.solver;
      row["lp"] = json{{"vars", r.lp.vars},
                       {"constraints", r.lp.constraints},
                       {"pivots", r.lp.pivots}};
      row["tight"] = r.tight_no_reduction;
      if (r.have_bracket)
        row["bracket"] = json{{"lower", json_rat(r.lower)}, {"upper", json_rat(r.upper)}};
    } else {
      row["error"] = r.error;
    }
    rows.push_back(row);
  }
  json out{{"rows", rows}};
  if (rep.limit_hint) out["limit_hint"] = json_rat(*rep.limit_hint);
  return out;
}

// ---------------------------------------------------------------------------
// Cost tables for duality certificates.  A table is a JSON array of rules
//   { "from": <arc, 1-based>, "to": <arc, 1-based>,
//     "wclass": <residue> | "parity": "even"/"odd" | (neither: any wclass),
//     "cost": "<rational>" }
// Every turn type must be covered; the most specific matching rule wins
// (exact wclass beats parity beats wildcard).

inline std::vector<Rat> parse_cost_table(const json& table, const Problem& p) {
  if (!table.is_array()) throw Error(ErrKind::Parse, "cost table must be a JSON array");
  struct Rule {
    int from, to;
    int spec = 0;  // 2 exact wclass, 1 parity, 0 wildcard
    long long wcls = 0;
    int parity = 0;
    Rat cost;
  };
  std::vector<Rule> rules;
  for (auto& e : table) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("cost"))
      throw Error(ErrKind::Parse, "cost rule needs from, to, and cost fields");
    Rule r;
    r.from = e.at("from").get<int>() - 1;
    r.to = e.at("to").get<int>() - 1;
    if (r.from < 0 || r.from >= static_cast<int>(p.arcs.size()) || r.to < 0 ||
        r.to >= static_cast<int>(p.arcs.size()))
      throw Error(ErrKind::Parse, "cost rule references an arc outside the chain");
    if (e.contains("wclass")) {
      r.spec = 2;
      r.wcls = e.at("wclass").get<long long>();
    } else if (e.contains("parity")) {
      std::string par = e.at("parity").get<std::string>();
      if (par != "even" && par != "odd")
        throw Error(ErrKind::Parse, "cost rule parity must be \"even\" or \"odd\"");
      r.spec = 1;
      r.parity = par == "odd" ? 1 : 0;
    }
    if (e.at("cost").is_string())
      r.cost = parse_rat(e.at("cost").get<std::string>());
    else
      r.cost = Rat(e.at("cost").get<long long>());
    rules.push_back(r);
  }
  std::vector<Rat> costs(p.turns.size());
  for (int t = 0; t < static_cast<int>(p.turns.size()); ++t) {
    const TurnType& tt = p.turns.turns[t];
    int best = -1;
    for (size_t i = 0; i < rules.size(); ++i) {
      const Rule& r = rules[i];
      if (r.from != tt.from || r.to != tt.to) continue;
      if (r.spec == 2 && mod_pos(Int(r.wcls), Int(p.turns.we)) != Int(tt.wcls)) continue;
      if (r.spec == 1 && tt.wcls % 2 != r.parity) continue;
      if (best < 0 || r.spec > rules[best].spec) best = static_cast<int>(i);
    }
    if (best < 0)
      throw Error(ErrKind::Parse, "cost table does not cover turn (" +
                                      std::to_string(tt.from + 1) + ", wclass " +
                                      std::to_string(tt.wcls) + ", " +
                                      std::to_string(tt.to + 1) + ")");
    costs[t] = rules[best].cost;
  }
  return costs;
}

inline json cost_report_json(const CostReport& cr) {
  json out;
  out["costs_ok"] = cr.costs_ok;
  out["pieces_ok"] = cr.pieces_ok;
  out["pieces_checked"] = cr.pieces_checked;
  out["bound"] = cr.bound;
  out["bounded"] = cr.bounded;
  if (cr.costs_ok && cr.pieces_ok && cr.bounded) {
    out["K"] = json_rat(cr.K);
    out["scl_lower"] = json_rat(cr.scl_lower);
  }
  if (!cr.pieces_ok) out["violator_cost"] = json_rat(cr.violator_cost);
  return out;
}

}  // namespace bsscl
