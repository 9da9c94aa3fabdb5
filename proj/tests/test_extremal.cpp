#include <catch2/catch_amalgamated.hpp>

#include "bsscl/bsscl.hpp"

using namespace bsscl;

namespace {

Chain mk(const std::string& s, const GroupParams& G) { return parse_chain(s, G); }

bool mentions(const std::vector<std::string>& reasons, const std::string& needle) {
  for (auto& r : reasons)
    if (r.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("sufficient criterion sorts words by surplus and s-invariant") {
  {
    // both words carry nonzero t-surplus, so the generic branch passes
    auto G = group_params(4, 6);
    auto chk = sufficient_extremal_check(mk("at^2At^-1 + t^-1", G), G);
    CHECK(chk.pass);
    CHECK(chk.reasons.empty());
  }
  {
    // t-balanced words need vanishing s; the commutator has s = 1/3
    auto G = group_params(2, 3);
    auto chk = sufficient_extremal_check(mk("atAT", G), G);
    CHECK_FALSE(chk.pass);
    REQUIRE(chk.reasons.size() == 1);
    CHECK(mentions(chk.reasons, "1/3"));

    auto chk2 = sufficient_extremal_check(mk("at^2At^-2", G), G);
    CHECK_FALSE(chk2.pass);
    CHECK(mentions(chk2.reasons, "5/9"));
  }
  {
    // M = L: the total a-exponent is the obstruction
    auto G = group_params(2, 2);
    CHECK(sufficient_extremal_check(mk("at^2At^-1 + t^-1", G), G).pass);
    auto chk = sufficient_extremal_check(mk("ataT", G), G);
    CHECK_FALSE(chk.pass);
    CHECK(mentions(chk.reasons, "total a-exponent 2"));
  }
  {
    // M = -L: odd surplus always passes, even surplus needs zero alternating sum
    auto G = group_params(2, -2);
    CHECK(sufficient_extremal_check(mk("at", G), G).pass);
    auto chk = sufficient_extremal_check(mk("atAT", G), G);
    CHECK_FALSE(chk.pass);
    CHECK(mentions(chk.reasons, "alternating sum 2"));
  }
}

TEST_CASE("pseudo-inverse probe finds vanishing pairs") {
  auto G = group_params(2, 3);
  {
    auto probe = reducedness_probe(mk("atAT + taTA", G), G);
    REQUIRE(probe.status == ProbeResult::Status::NotReduced);
    CHECK(probe.witness_i == 0);
    CHECK(probe.witness_j == 1);
    CHECK(probe.witness_p == 1);
    CHECK(probe.witness_q == 1);
  }
  {
    // a conjugate of the inverse is just as good a witness
    auto probe = reducedness_probe(mk("atAT + ttaTAT", G), G);
    CHECK(probe.status == ProbeResult::Status::NotReduced);
  }
  {
    auto probe = reducedness_probe(mk("atAT", G), G);
    CHECK(probe.status == ProbeResult::Status::Reduced);
  }
  {
    // opposite t-surpluses force the ratio 1:2, which lands on scl = 0 here
    auto probe = reducedness_probe(mk("at^2 + t^-1", G), G);
    REQUIRE(probe.status == ProbeResult::Status::NotReduced);
    CHECK(probe.witness_p == 1);
    CHECK(probe.witness_q == 2);
  }
  {
    // same words, but over (2,4) the forced ratio has positive scl
    auto G24 = group_params(2, 4);
    auto probe = reducedness_probe(mk("at^2 + t^-1", G24), G24);
    CHECK(probe.status == ProbeResult::Status::Reduced);
  }
}

TEST_CASE("hand-assembled optimum carries a one-component branched surface") {
  auto G = group_params(4, 6);
  auto chain = mk("at^2At^-1 + t^-1", G);
  auto p = build_problem(chain, G, {});
  REQUIRE(p.arcs.size() == 4);
  REQUIRE(p.turns.dv == 12);

  auto T = [&](int from, int to, long long wcls) {
    int id = p.turns.index_of(from, to, wcls);
    REQUIRE(id >= 0);
    return id;
  };

  // per unit degree: one annular 2-cycle, one 4-cycle, and two fans of
  // self-turns soaking up the leftover corner mass
  PieceSolution sol;
  sol.pieces.push_back({{T(1, 3, 0), 1}, {T(3, 1, 0), 1}});
  sol.pieces.push_back({{T(1, 0, 0), 1}, {T(0, 3, 0), 1}, {T(3, 2, 0), 1}, {T(2, 1, 0), 1}});
  sol.pieces.push_back({{T(0, 0, 0), 4}});
  sol.pieces.push_back({{T(2, 2, 0), 6}});
  sol.weights = {rat(1, 2), rat(1, 2), rat(1, 8), rat(1, 12)};
  sol.kappa = rat(29, 24);

  for (auto& pc : sol.pieces) CHECK(is_disklike(p.arcs, p.turns, pc));

  auto bs = branched_surface(p, sol);
  CHECK(bs.n_pieces == 4);
  CHECK(bs.n_components == 1);
  for (int j = 0; j < 4; ++j) CHECK(bs.component[j] == 0);
  CHECK(bs.level == std::vector<int>{0, -1, -2, 0});
  CHECK(bs.s_piece == std::vector<Rat>{Rat(0), Rat(0), Rat(4), Rat(-6)});
  REQUIRE(bs.balanced.size() == 1);
  CHECK_FALSE(bs.balanced[0]);

  // dropping a piece leaves a turn glued to nothing
  PieceSolution bad;
  bad.pieces.push_back({{T(1, 3, 0), 1}, {T(3, 1, 0), 1}});
  bad.pieces.push_back({{T(0, 0, 0), 4}});
  bad.weights = {rat(1, 2), rat(1, 8)};
  bad.kappa = rat(9, 8);
  CHECK_THROWS_AS(branched_surface(p, bad), Error);
}

TEST_CASE("verdict certifies an extremal surface for the two-term chain") {
  auto G = group_params(4, 6);
  auto chain = mk("at^2At^-1 + t^-1", G);
  auto r = scl_auto(chain, G);
  REQUIRE(r.value == rat(19, 48));
  REQUIRE(r.pieces);

  auto v = extremal_verdict(chain, G, r);
  REQUIRE(v.status == ExtremalVerdict::Status::Exists);
  CHECK(v.delta == rat(1, 24));
  CHECK(v.weights.size() == r.pieces->pieces.size());
  CHECK(v.surface_built);

  // the face LP is deterministic, so reruns reproduce the margin exactly
  auto v2 = extremal_verdict(chain, G, r);
  CHECK(v2.delta == v.delta);
  CHECK(v2.weights == v.weights);

  // the certificate weights assemble into a surface whose normalized
  // curvature deficit reproduces the computed value
  PieceSolution cert;
  cert.pieces = r.pieces->pieces;
  cert.weights = v.weights;
  cert.kappa = r.pieces->kappa;
  auto p = build_problem(chain, G, {});
  auto surf = export_surface(p, cert, r.value);
  CHECK(surf.degree == 24);
  CHECK(surf.consistent);
  CHECK(surf.scl == rat(19, 48));
}

TEST_CASE("verdict stays inconclusive when no reweighting kills s") {
  auto G = group_params(2, 3);
  auto chain = mk("atAT", G);
  auto r = scl_pieces(chain, G, 2);
  REQUIRE(r.value == rat(1, 12));

  auto v = extremal_verdict(chain, G, r);
  CHECK(v.status == ExtremalVerdict::Status::Unknown);
  REQUIRE(v.surface_built);
  CHECK(v.surface.n_pieces == 2);
  CHECK(v.surface.n_components == 1);
  REQUIRE(v.surface.balanced.size() == 1);
  CHECK(v.surface.balanced[0]);
  CHECK(v.surface.s_component[0] == rat(1, 2));
  CHECK(mentions(v.reasons, "face"));
}

TEST_CASE("sum-rule groups are redirected before any probe") {
  for (long long L : {2LL, -2LL}) {
    auto G = group_params(2, L);
    auto v = extremal_verdict(mk("atAT", G), G, SclResult{});
    CHECK(v.status == ExtremalVerdict::Status::Unknown);
    CHECK(mentions(v.reasons, "sum rules"));
  }
}
