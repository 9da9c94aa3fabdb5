#include <catch2/catch_amalgamated.hpp>

#include "bsscl/bsscl.hpp"

using namespace bsscl;

namespace {

Chain mk(const std::string& s, const GroupParams& G) { return parse_chain(s, G); }

Rat solve_auto(const std::string& s, long long M, long long L, SolverConfig cfg = {}) {
  auto G = group_params(M, L);
  auto res = scl_auto(mk(s, G), G, cfg);
  REQUIRE(res.defined);
  return res.value;
}

const char* eg3_table = R"([
  {"from": 1, "to": 1, "parity": "even", "cost": "1/4"},
  {"from": 1, "to": 1, "parity": "odd",  "cost": "3/4"},
  {"from": 4, "to": 2, "parity": "even", "cost": "1"},
  {"from": 4, "to": 2, "parity": "odd",  "cost": "1/2"},
  {"from": 2, "to": 4, "cost": "0"},
  {"from": 3, "to": 3, "cost": "1/3"},
  {"from": 2, "to": 1, "cost": "1/3"},
  {"from": 4, "to": 3, "cost": "0"},
  {"from": 1, "to": 4, "cost": "1/4"},
  {"from": 3, "to": 2, "cost": "1"}
])";

}  // namespace

TEST_CASE("commutator of a and t across small groups") {
  // 1/2 - 1/min(|M|,|L|) is the closed form; at (2,2) the commutator vanishes.
  CHECK(solve_auto("atAT", 2, 2) == Rat(0));
  CHECK(solve_auto("atAT", 2, 3) == rat(1, 12));
  CHECK(solve_auto("atAT", 2, 4) == rat(1, 8));

  auto G = group_params(2, 2);
  auto res = scl_block(mk("atAT", G), G);
  CHECK(res.value == Rat(0));
  REQUIRE(res.pieces);
  CHECK(res.pieces->kappa == Rat(1));
  CHECK(res.certified);
}

TEST_CASE("powered generator family against its closed form") {
  for (auto [M, L] : {std::pair<long long, long long>{2, 2}, {2, 4}, {4, 6}, {6, 9}}) {
    auto G = group_params(M, L);
    for (long long k = 1; k <= 6; ++k) {
      std::string s = "a^" + std::to_string(k) + "t^2 + 2 t^-1";
      auto res = scl_block(mk(s, G), G);
      REQUIRE(res.defined);
      auto f = eg1_formula(G, k);
      INFO("M=" << M << " L=" << L << " k=" << k);
      CHECK(res.value == f.value);
      CHECK(res.certified);
    }
  }
}

TEST_CASE("powered generator at (2,4), k=1: value and kappa") {
  auto G = group_params(2, 4);
  auto res = scl_block(mk("at^2 + 2 t^-1", G), G);
  CHECK(res.value == rat(1, 4));
  REQUIRE(res.pieces);
  CHECK(res.pieces->kappa == rat(3, 2));
}

TEST_CASE("literal block LP agrees with the cycle solver on small instances") {
  struct Case {
    const char* chain;
    long long M, L;
  } cases[] = {
      {"at^2 + 2 t^-1", 2, 2},
      {"at^2 + 2 t^-1", 2, 4},
      {"atAT", 2, 2},
      {"at^2At^-1 + t^-1", 2, 2},
  };
  for (auto& c : cases) {
    auto G = group_params(c.M, c.L);
    auto chain = mk(c.chain, G);
    auto lit = scl_block_literal(chain, G);
    auto cyc = scl_block(chain, G);
    INFO(c.chain << " in BS(" << c.M << "," << c.L << ")");
    CHECK(lit.value == cyc.value);
    CHECK(lit.certified);
  }
}

TEST_CASE("literal block LP refuses trivial winding degree") {
  auto G = group_params(2, 3);
  auto chain = mk("at^2 + 2 t^-1", G);  // rho = 0 and gcd(M, L) = 1: one interval per arc
  CHECK_THROWS_AS(scl_block_literal(chain, G), Error);
  try {
    scl_block_literal(chain, G);
  } catch (const Error& e) {
    CHECK(e.kind == ErrKind::Unsupported);
  }
  CHECK(scl_block(chain, G).value == Rat(0));  // the cycle solver still applies
}

TEST_CASE("commutator of a and t^2 in BS(2,3)") {
  auto G = group_params(2, 3);
  auto chain = mk("at^2At^-2", G);

  auto res = scl_pieces(chain, G, 3);
  REQUIRE(res.defined);
  CHECK(res.value == rat(5, 24));
  REQUIRE(res.pieces);
  CHECK(res.pieces->kappa == rat(5, 4) + rat(1, 3));
  CHECK(res.certified);

  auto se = export_surface(build_problem(chain, G, {}), *res.pieces, res.value);
  CHECK(se.degree == 36);
  CHECK(se.consistent);
  CHECK(se.scl == rat(5, 24));

  auto low = scl_pieces(chain, G, 1);
  CHECK(low.infeasible_at_bound);
}

TEST_CASE("turn-cost certificate for the (2,3) double commutator") {
  auto G = group_params(2, 3);
  auto chain = mk("at^2At^-2", G);
  auto p = build_problem(chain, G, {});
  auto costs = parse_cost_table(json::parse(eg3_table), p);

  auto rep = verify_turn_costs(chain, G, costs, 3);
  CHECK(rep.costs_ok);
  CHECK(rep.pieces_ok);
  CHECK(rep.pieces_checked == 197130);
  REQUIRE(rep.bounded);
  CHECK(rep.K == rat(19, 12));
  CHECK(rep.scl_lower == rat(5, 24));

  auto zero = verify_turn_costs(chain, G, std::vector<Rat>(p.turns.size(), Rat(0)), 2);
  CHECK(zero.costs_ok);
  CHECK_FALSE(zero.pieces_ok);
  REQUIRE(zero.violator);
  CHECK(zero.violator_cost == Rat(0));

  CHECK_THROWS_AS(verify_turn_costs(chain, G, std::vector<Rat>(3, Rat(1)), 2), Error);
}

TEST_CASE("a word against its inverse bounds nothing") {
  auto G = group_params(2, 3);
  for (auto s : {"atAT + taTA", "at^2At^-1 + tat^-2A"}) {
    auto res = scl_pieces(mk(s, G), G, 2);
    REQUIRE(res.defined);
    INFO(s);
    CHECK(res.value == Rat(0));
    CHECK(res.certified);
  }
}

TEST_CASE("scl is homogeneous in the chain coefficients") {
  auto G = group_params(2, 3);
  auto one = scl_auto(mk("atAT", G), G);
  auto two = scl_auto(mk("2 atAT", G), G);
  CHECK(two.value == Rat(2) * one.value);

  auto half = scl_auto(mk("1/2 atAT", G), G);
  CHECK(half.value == rat(1, 24));
}

TEST_CASE("piece bound escalation only improves the value") {
  auto G = group_params(2, 3);
  auto chain = mk("at^2At^-2", G);
  auto b2 = scl_pieces(chain, G, 2);
  auto b3 = scl_pieces(chain, G, 3);
  REQUIRE_FALSE(b2.infeasible_at_bound);
  REQUIRE_FALSE(b3.infeasible_at_bound);
  CHECK(b2.value == rat(19, 72));
  CHECK(b2.value >= b3.value);

  // plateau once the optimum's pieces fit under the bound
  auto c2 = scl_pieces(mk("atAT", G), G, 2);
  auto c3 = scl_pieces(mk("atAT", G), G, 3);
  CHECK(c2.value == rat(1, 12));
  CHECK(c3.value == c2.value);
}

TEST_CASE("solvable groups collapse to zero without an LP") {
  // With |M| = 1 or |L| = 1 every null-homologous word pinches down to a
  // vertex element, so the chain empties out before any solver runs.
  auto G = group_params(1, 5);
  auto res = scl_auto(mk("atAT", G), G);
  CHECK(res.defined);
  CHECK(res.value == Rat(0));
  CHECK(res.solver == "empty");
  CHECK(res.certified);
  CHECK(res.dropped_elliptic.size() == 1);

  auto Gn = group_params(3, -1);
  CHECK(scl_auto(mk("at^2At^-2", Gn), Gn).value == Rat(0));
}

TEST_CASE("elliptic summands are dropped, possibly emptying the chain") {
  auto G = group_params(2, 3);
  auto res = scl_auto(mk("a^3", G), G);
  CHECK(res.value == Rat(0));
  CHECK(res.solver == "empty");
  REQUIRE(res.dropped_elliptic.size() == 1);

  auto mixed = scl_auto(mk("atAT + a^2", G), G);
  CHECK(mixed.value == rat(1, 12));
  CHECK(mixed.dropped_elliptic.size() == 1);
}

TEST_CASE("nonzero t-homology has no finite answer") {
  auto G = group_params(2, 3);
  auto res = scl_auto(mk("t", G), G);
  CHECK_FALSE(res.defined);
}

TEST_CASE("auto dispatch matches the dedicated solvers") {
  auto G = group_params(3, 5);
  auto chain = mk("atAT", G);
  auto a = scl_auto(chain, G);
  auto b = scl_block(chain, G);
  CHECK(a.value == b.value);
  CHECK(a.value == rat(7, 30));
}

TEST_CASE("surface export degree scales away all weight denominators") {
  auto G = group_params(2, 4);
  auto chain = mk("atAT", G);
  auto res = scl_block(chain, G);
  REQUIRE(res.pieces);
  auto se = export_surface(build_problem(chain, G, {}), *res.pieces, res.value);
  CHECK(se.consistent);
  for (auto& m : se.multiplicity) CHECK(m >= 1);
}
