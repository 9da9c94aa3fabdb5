#include <catch2/catch_amalgamated.hpp>

#include "bsscl/encoding.hpp"

#include <set>

using namespace bsscl;

static Problem make(const std::string& chain, long long M, long long L) {
  auto G = group_params(M, L);
  return build_problem(parse_chain(chain, G), G);
}

TEST_CASE("winding context for the square commutator") {
  auto p = make("at^2At^-2", 2, 3);
  CHECK(p.wc.rho == 2);
  CHECK(p.wc.dv_abs == 36);
  CHECK(p.wc.we_mod == 36);
  REQUIRE(p.wc.w0.size() == 4);
  CHECK(p.wc.w0[0] == 4);
  CHECK(p.wc.w0[1] == 6);
  CHECK(p.wc.w0[2] == 9);
  CHECK(p.wc.w0[3] == 6);
}

TEST_CASE("winding context for the mixed chain") {
  auto p = make("at^2At^-1 + t^-1", 2, 3);
  CHECK(p.wc.rho == 1);
  CHECK(p.wc.dv_abs == 6);
  CHECK(p.wc.we_mod == 6);
  REQUIRE(p.wc.w0.size() == 4);
  CHECK(p.wc.w0[0] == 2);
  CHECK(p.wc.w0[1] == 1);
  CHECK(p.wc.w0[2] == 3);
  CHECK(p.wc.w0[3] == 1);
}

TEST_CASE("turn existence and pairing") {
  auto p = make("at^2At^-2", 2, 3);
  std::set<std::pair<int, int>> pairs(p.turns.arc_pairs.begin(), p.turns.arc_pairs.end());
  std::set<std::pair<int, int>> expect = {{0, 0}, {0, 3}, {1, 0}, {1, 3},
                                          {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  CHECK(pairs == expect);
  CHECK(p.turns.size() == 8 * 36);

  for (int t = 0; t < p.turns.size(); ++t) {
    CHECK(p.turns.pair_idx[p.turns.pair_idx[t]] == t);
    CHECK(p.turns.pair_idx[t] != t);
  }
  // pair((a1, 1, a1)) = (a4, -1, a2)
  int t11 = p.turns.index_of(0, 0, 1);
  REQUIRE(t11 >= 0);
  CHECK(p.turns.pair_idx[t11] == p.turns.index_of(3, 1, 35));

  auto q = make("at^2At^-1 + t^-1", 2, 3);
  std::set<std::pair<int, int>> qpairs(q.turns.arc_pairs.begin(), q.turns.arc_pairs.end());
  std::set<std::pair<int, int>> qexpect = {{0, 0}, {0, 3}, {1, 3}, {1, 0},
                                           {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  CHECK(qpairs == qexpect);
}

TEST_CASE("turn contributions and piece winding") {
  auto p = make("at^2At^-2", 2, 3);
  int t11_1 = p.turns.index_of(0, 0, 1);
  CHECK(turn_contribution(p.turns, t11_1) == 2);  // outgoing t side multiplies by M
  int t33_m1 = p.turns.index_of(2, 2, 35);
  CHECK(turn_contribution(p.turns, t33_m1) == 33);  // incoming side multiplies by L
  CHECK(p.turns.delta[t11_1] == 3);                 // arc winding 1 plus contribution 2

  int t11_0 = p.turns.index_of(0, 0, 0);
  TurnMultiset m1 = {{t11_0, 1}, {t11_1, 1}};
  CHECK(piece_winding(p.turns, m1) == 4);
  CHECK(to_ll(p.wc.w0[0]) == 4);  // winding lands in W0(a1) = 4Z: disk-like
  CHECK(is_disklike(p.arcs, p.turns, m1));

  int t33_0 = p.turns.index_of(2, 2, 0);
  TurnMultiset m2 = {{t33_0, 1}, {t33_m1, 2}};
  CHECK(piece_winding(p.turns, m2) == 27);  // -9 mod 36, inside W0(a3) = 9Z
  CHECK(to_ll(p.wc.w0[2]) == 9);
  CHECK(is_disklike(p.arcs, p.turns, m2));

  // winding outside every support W0 is not disk-like
  int t11_2 = p.turns.index_of(0, 0, 2);
  TurnMultiset m4 = {{t11_0, 1}, {t11_2, 1}};
  CHECK(piece_winding(p.turns, m4) == 6);
  CHECK_FALSE(is_disklike(p.arcs, p.turns, m4));

  // class sum cancelling mod 36 is disk-like for every support
  int t11_16 = p.turns.index_of(0, 0, 16);
  TurnMultiset m3 = {{t11_0, 3}, {t11_16, 1}};
  CHECK(piece_winding(p.turns, m3) == 0);
  CHECK(is_disklike(p.arcs, p.turns, m3));
}

TEST_CASE("self-turns of the basic commutator") {
  auto p = make("atAT", 2, 3);
  CHECK(p.wc.rho == 1);
  CHECK(p.wc.dv_abs == 6);
  std::set<std::pair<int, int>> pairs(p.turns.arc_pairs.begin(), p.turns.arc_pairs.end());
  std::set<std::pair<int, int>> expect = {{0, 0}, {1, 1}};
  CHECK(pairs == expect);
  for (long long w = 0; w < 6; ++w)
    CHECK(p.turns.pair_idx[p.turns.index_of(0, 0, w)] == p.turns.index_of(1, 1, (6 - w) % 6));
}

TEST_CASE("interval alphabet structure") {
  auto p = make("at^2 + 2t^-1", 2, 4);
  CHECK(p.wc.dv_abs == 2);
  CHECK(p.wc.we_mod == 1);
  REQUIRE(p.arcs.size() == 3);
  REQUIRE(p.turns.size() == 4);

  auto ia = interval_alphabet(p.arcs, p.turns);
  CHECK(ia.host_len[0] == 1);  // arc a1, winding 1
  CHECK(ia.host_len[1] == 2);  // arc a2, winding 0 -> full wrap
  CHECK(ia.host_len[2] == 2);  // arc a3
  for (int t = 0; t < 4; ++t) CHECK(ia.host_len[3 + t] == 2);  // all contributions are 0
  CHECK(ia.total == 13);

  long long nsyl = 3;
  CHECK(ia.total <= 2 * nsyl * nsyl * ia.dv * ia.dv);

  // boundary order: arc -> outgoing turn -> target arc
  int t13 = p.turns.index_of(0, 2, 0);
  REQUIRE(t13 >= 0);
  CHECK(ia.consecutive(ia.last_of_arc(0), ia.first_of_turn(t13)));
  CHECK(ia.consecutive(ia.last_of_turn(t13), ia.first_of_arc(2)));
  CHECK_FALSE(ia.consecutive(ia.last_of_arc(0), ia.first_of_arc(2)));
  CHECK_FALSE(ia.consecutive(ia.first_of_turn(t13), ia.first_of_arc(2)));
  CHECK(ia.consecutive(ia.first_of_arc(1), ia.last_of_arc(1)));  // internal step
  CHECK_FALSE(ia.consecutive(ia.last_of_arc(0), ia.last_of_arc(0)));

  // successors of an arc-end are exactly the outgoing turns
  std::set<long long> succ;
  ia.for_succs(ia.last_of_arc(0), [&](long long J) { succ.insert(J); });
  CHECK(succ == std::set<long long>{ia.first_of_turn(t13)});
  std::set<long long> pred;
  ia.for_preds(ia.first_of_arc(2), [&](long long I) { pred.insert(I); });
  int t23 = p.turns.index_of(1, 2, 0);
  CHECK(pred == std::set<long long>{ia.last_of_turn(t13), ia.last_of_turn(t23)});
}

TEST_CASE("cut generation obeys the junction restrictions") {
  auto p = make("at^2 + 2t^-1", 2, 4);
  auto ia = interval_alphabet(p.arcs, p.turns);
  auto cuts = generate_cuts(ia);
  CHECK(static_cast<long long>(cuts.size()) == count_cuts(ia));
  long long nsyl = 3, D = ia.dv;
  CHECK(count_cuts(ia) <= 5 * nsyl * nsyl * nsyl * nsyl * D * D * D * D * D);

  bool some_genuine = false;
  for (auto& c : cuts) {
    CHECK(c.k >= 1);
    CHECK(c.k <= ia.dv);
    if (c.k == 1) CHECK(c.Ik == c.Ib);
    if (c.k == ia.dv) CHECK(c.Ik1 == c.Ib);
    if (!c.genuine) CHECK(ia.consecutive(c.Ik, c.Ik1));
    if (c.genuine) {
      CHECK((c.k == 1 || c.k == ia.dv));
      some_genuine = true;
    }
  }
  CHECK(some_genuine);

  // every turn's first interval shows up as the right end of some cut
  for (int t = 0; t < p.turns.size(); ++t) {
    bool seen = false;
    for (auto& c : cuts)
      if (c.Ik1 == ia.first_of_turn(t)) seen = true;
    CHECK(seen);
  }
}

TEST_CASE("degenerate one-interval modulus") {
  auto p = make("t + t^-1", 2, 3);
  CHECK(p.wc.dv_abs == 1);
  auto ia = interval_alphabet(p.arcs, p.turns);
  CHECK(ia.total == 4);
  auto cuts = generate_cuts(ia);
  REQUIRE(cuts.size() == 4);
  for (auto& c : cuts) {
    CHECK(c.genuine);
    CHECK(c.k == 1);
    CHECK(c.Ik == c.Ib);
    CHECK(c.Ik1 == c.Ib);
  }
}

TEST_CASE("resource ceilings trigger") {
  auto G = group_params(2, 3);
  auto chain = parse_chain("at^2At^-2", G);
  auto at = build_arc_table(chain);
  CHECK_THROWS_AS(winding_context(at, G, Int(10)), Error);
  auto ctx = winding_context(at, G);
  CHECK_THROWS_AS(enumerate_turns(at, ctx, 10), Error);

  auto p = make("at^2 + 2t^-1", 2, 4);
  auto ia = interval_alphabet(p.arcs, p.turns);
  CHECK_THROWS_AS(generate_cuts(ia, 3), Error);
}
