// Command-line surface for the exact scl calculator.
//
// Exit codes: 0 success, 2 parse error, 3 homology obstruction (scl is
// undefined/infinite), 4 resource ceiling hit.

#include "bsscl/bsscl.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace bsscl;

namespace {

const char* usage_text = R"(usage: bsscl <command> [options] [argument]

commands:
  scl       --M <int> --L <int> "<chain>"        exact scl of a rational chain
  extremal  --M <int> --L <int> "<chain>"        scl plus the extremal-surface verdict
  formula   --M <int> --L <int> <family>         closed form: eg1 | eg2 | product | commutator
  sweep     --m <int> --l <int> --d A..B "<tpl>" solve the template in BS(dm, dl) for d in A..B
  certify   --M <int> --L <int> "<chain>" --costs <file> --bound <n>
                                                 check a duality cost table and report the
                                                 certified lower bound

options:
  --solver auto|block|pieces   solver selection for scl/extremal (default auto)
  --max-turns <n>              piece bound for --solver pieces (0 = escalate)
  --max-pieces <n>             enumeration ceiling (certify default 50000000)
  --max-cuts <n>               cut-variable ceiling for the literal block LP
                               (env BS_SCL_MAX_CUTS supplies the default)
  --pieces-start / --pieces-cap  escalation range for the automatic piece solver
  --power-bound <n>            pseudo-inverse probe depth for extremal (default 6)
  --k <int>                    a-exponent for formula family eg1 (default 1)
  --limit <p/q>                optional limit hint attached to sweep reports
  --json                       emit the JSON report instead of text

Chains are '+'-joined terms, each an optional rational coefficient followed by
a word in letters a, t, A = a^-1, T = t^-1 with optional ^<exp>.
)";

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> flag;
  std::set<std::string> sw;
};

const std::set<std::string> kSwitches = {"--json", "--help"};

Args parse_args(int argc, char** argv) {
  Args a;
  for (int i = 2; i < argc; ++i) {
    std::string s = argv[i];
    if (s.rfind("--", 0) != 0) {
      a.pos.push_back(s);
    } else if (kSwitches.count(s)) {
      a.sw.insert(s);
    } else {
      if (i + 1 >= argc) throw Error(ErrKind::Parse, "flag " + s + " needs a value");
      a.flag[s] = argv[++i];
    }
  }
  return a;
}

long long get_ll(const Args& a, const std::string& name) {
  auto it = a.flag.find(name);
  if (it == a.flag.end()) throw Error(ErrKind::Parse, "missing required flag " + name);
  try {
    size_t used = 0;
    long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrKind::Parse, "flag " + name + " needs an integer, got '" + it->second + "'");
  }
}

long long get_ll_or(const Args& a, const std::string& name, long long dflt) {
  return a.flag.count(name) ? get_ll(a, name) : dflt;
}

std::string get_str(const Args& a, const std::string& name) {
  auto it = a.flag.find(name);
  if (it == a.flag.end()) throw Error(ErrKind::Parse, "missing required flag " + name);
  return it->second;
}

const std::string& one_positional(const Args& a, const char* what) {
  if (a.pos.size() != 1)
    throw Error(ErrKind::Parse, std::string("expected exactly one ") + what + " argument");
  return a.pos[0];
}

SolverConfig make_config(const Args& a) {
  SolverConfig cfg;
  std::string solver = a.flag.count("--solver") ? a.flag.at("--solver") : "auto";
  if (solver == "block")
    cfg.kind = SolverConfig::Kind::Block;
  else if (solver == "pieces")
    cfg.kind = SolverConfig::Kind::Pieces;
  else if (solver != "auto")
    throw Error(ErrKind::Parse, "unknown solver '" + solver + "'");
  cfg.max_turns = static_cast<int>(get_ll_or(a, "--max-turns", 0));
  cfg.max_pieces = get_ll_or(a, "--max-pieces", cfg.max_pieces);
  cfg.pieces_start = static_cast<int>(get_ll_or(a, "--pieces-start", cfg.pieces_start));
  cfg.pieces_cap = static_cast<int>(get_ll_or(a, "--pieces-cap", cfg.pieces_cap));
  if (const char* env = std::getenv("BS_SCL_MAX_CUTS")) cfg.max_cut_vars = std::atoll(env);
  cfg.max_cut_vars = get_ll_or(a, "--max-cuts", cfg.max_cut_vars);
  return cfg;
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_scl(const Args& a, bool with_extremal) {
  auto G = group_params(get_ll(a, "--M"), get_ll(a, "--L"));
  SolverConfig cfg = make_config(a);
  auto t0 = std::chrono::steady_clock::now();
  Chain chain = parse_chain(one_positional(a, "chain"), G);
  SclResult res = scl_auto(chain, G, cfg);
  for (auto& w : res.dropped_elliptic) std::cerr << "dropped elliptic summand: " << w << "\n";
  if (!res.defined) {
    if (a.sw.count("--json")) emit_json(result_json(G, chain, res, elapsed_ms(t0)));
    std::cerr << "scl undefined/infinite: nonzero t-homology\n";
    return 3;
  }
  ExtremalVerdict verdict;
  if (with_extremal) {
    int pb = static_cast<int>(get_ll_or(a, "--power-bound", 6));
    verdict = extremal_verdict(chain, G, res, pb, cfg);
  }
  if (a.sw.count("--json")) {
    emit_json(result_json(G, chain, res, elapsed_ms(t0), with_extremal ? &verdict : nullptr));
    return 0;
  }
  std::cout << rat_str(res.value) << "\n";
  std::cerr << "solver " << res.solver << ", " << res.lp.vars << " vars, " << res.lp.pivots
            << " pivots, " << elapsed_ms(t0) << " ms\n";
  if (!res.note.empty()) std::cerr << res.note << "\n";
  if (with_extremal) {
    if (verdict.status == ExtremalVerdict::Status::Exists)
      std::cout << "extremal: exists (margin " << rat_str(verdict.delta) << ")\n";
    else
      std::cout << "extremal: unknown\n";
    for (auto& why : verdict.reasons) std::cout << "  " << why << "\n";
  }
  return 0;
}

int cmd_formula(const Args& a) {
  auto G = group_params(get_ll(a, "--M"), get_ll(a, "--L"));
  std::string family = one_positional(a, "family");
  FormulaResult f;
  if (family == "eg1")
    f = eg1_formula(G, get_ll_or(a, "--k", 1));
  else if (family == "eg2")
    f = eg2_formula(G);
  else if (family == "product")
    f = talt_product_formula(G);
  else if (family == "commutator")
    f = talt_commutator_formula(G);
  else
    throw Error(ErrKind::Parse, "unknown formula family '" + family +
                                    "' (use eg1, eg2, product, or commutator)");
  bool exact = f.validity == FormulaResult::Validity::Exact;
  if (a.sw.count("--json")) {
    nlohmann::json j{{"family", family},
                     {"value", json_rat(f.value)},
                     {"validity", exact ? "exact" : "conditional"},
                     {"condition", f.condition}};
    if (!exact) j["lower"] = json_rat(f.lower);
    emit_json(j);
    return 0;
  }
  std::cout << rat_str(f.value) << " (" << (exact ? "exact" : "upper bound") << "; "
            << f.condition << ")\n";
  return 0;
}

int cmd_sweep(const Args& a) {
  long long m = get_ll(a, "--m"), l = get_ll(a, "--l");
  std::string range = get_str(a, "--d");
  size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw Error(ErrKind::Parse, "--d wants a range like 2..6, got '" + range + "'");
  long long d_from = 0, d_to = 0;
  try {
    d_from = std::stoll(range.substr(0, dots));
    d_to = std::stoll(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw Error(ErrKind::Parse, "--d wants a range like 2..6, got '" + range + "'");
  }
  std::optional<Rat> limit;
  if (a.flag.count("--limit")) limit = parse_rat(a.flag.at("--limit"));
  SolverConfig cfg = make_config(a);
  SweepReport rep =
      surgery_sweep(one_positional(a, "chain template"), m, l, d_from, d_to, cfg, 4, limit);
  if (a.sw.count("--json"))
    emit_json(sweep_json(rep));
  else
    std::cout << sweep_csv(rep);
  for (auto& row : rep.rows)
    if (!row.ok) std::cerr << "d=" << row.d << ": " << row.error << "\n";
  return 0;
}

int cmd_certify(const Args& a) {
  auto G = group_params(get_ll(a, "--M"), get_ll(a, "--L"));
  SolverConfig cfg = make_config(a);
  if (!a.flag.count("--max-pieces")) cfg.max_pieces = 50'000'000;
  int bound = static_cast<int>(get_ll(a, "--bound"));
  if (bound < 1) throw Error(ErrKind::Parse, "--bound must be at least 1");
  Chain chain = parse_chain(one_positional(a, "chain"), G);
  Problem p = build_problem(chain, G, cfg.encode);

  std::ifstream in(get_str(a, "--costs"));
  if (!in) throw Error(ErrKind::Parse, "cannot open cost file " + get_str(a, "--costs"));
  nlohmann::json table;
  try {
    in >> table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrKind::Parse, std::string("cost file is not valid JSON: ") + e.what());
  }
  std::vector<Rat> costs = parse_cost_table(table, p);

  CostReport rep = verify_turn_costs(chain, G, costs, bound, cfg);
  bool certified = rep.costs_ok && rep.pieces_ok && rep.bounded;
  if (a.sw.count("--json")) {
    emit_json(cost_report_json(rep));
    return certified ? 0 : 1;
  }
  if (certified) {
    std::cout << "lower bound " << rat_str(rep.scl_lower) << " certified up to bound "
              << rep.bound << "\n";
    return 0;
  }
  if (!rep.costs_ok)
    std::cerr << "certificate rejected: cost table has negative entries\n";
  else if (!rep.pieces_ok)
    std::cerr << "certificate fails: a piece of cost " << rat_str(rep.violator_cost)
              << " < 1 exists at bound " << rep.bound << "\n";
  else
    std::cerr << "certificate inconclusive: the turn-usage value is unbounded\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cmd = argc > 1 ? argv[1] : "";
  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    std::cout << usage_text;
    return 0;
  }
  try {
    Args a = parse_args(argc, argv);
    if (a.sw.count("--help")) {
      std::cout << usage_text;
      return 0;
    }
    if (cmd == "scl") return cmd_scl(a, false);
    if (cmd == "extremal") return cmd_scl(a, true);
    if (cmd == "formula") return cmd_formula(a);
    if (cmd == "sweep") return cmd_sweep(a);
    if (cmd == "certify") return cmd_certify(a);
    std::cerr << usage_text;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind) {
      case ErrKind::Parse:
        return 2;
      case ErrKind::Homology:
        return 3;
      case ErrKind::Resource:
        return 4;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
