#include <catch2/catch_amalgamated.hpp>

#include "bsscl/bsscl.hpp"

using namespace bsscl;

TEST_CASE("closed forms for the worked families") {
  {
    // 1/2 - gcd(|k|, d)/(2d)
    auto G = group_params(2, 2);
    CHECK(eg1_formula(G, 1).value == rat(1, 4));
    CHECK(eg1_formula(G, 2).value == Rat(0));
    CHECK(eg1_formula(G, -3).value == rat(1, 4));
    auto H = group_params(6, 9);
    CHECK(eg1_formula(H, 1).value == rat(1, 3));
    CHECK(eg1_formula(H, 2).value == rat(1, 3));
    CHECK(eg1_formula(H, 3).value == Rat(0));
    CHECK(eg1_formula(H, 6).value == Rat(0));
    CHECK(eg1_formula(H, 1).validity == FormulaResult::Validity::Exact);
  }
  {
    // (1 - 1/|M| - 1/|L|)/2
    CHECK(talt_product_formula(group_params(2, 3)).value == rat(1, 12));
    CHECK(talt_product_formula(group_params(2, 5)).value == rat(3, 20));
    CHECK(talt_product_formula(group_params(3, 4)).value == rat(5, 24));
    CHECK(talt_product_formula(group_params(3, 5)).value == rat(7, 30));
    CHECK(talt_product_formula(group_params(-2, 3)).value == rat(1, 12));
  }
  {
    // 1/2 - 1/min(|M|, |L|)
    CHECK(talt_commutator_formula(group_params(2, 3)).value == Rat(0));
    CHECK(talt_commutator_formula(group_params(3, 5)).value == rat(1, 6));
    CHECK(talt_commutator_formula(group_params(4, 4)).value == rat(1, 4));
  }
  {
    // solvable groups short-circuit to zero
    auto z = talt_product_formula(group_params(1, 5));
    CHECK(z.value == Rat(0));
    CHECK(z.condition.find("solvable") != std::string::npos);
    CHECK(eg2_formula(group_params(-1, 7)).value == Rat(0));
  }
}

TEST_CASE("two-term family: exact when d clears the threshold") {
  for (auto [M, L, num, den] : {std::tuple{2ll, 2ll, 1ll, 4ll},
                                std::tuple{4ll, 6ll, 19ll, 48ll},
                                std::tuple{6ll, 9ll, 31ll, 72ll}}) {
    auto f = eg2_formula(group_params(M, L));
    CHECK(f.value == rat(num, den));
    CHECK(f.validity == FormulaResult::Validity::Exact);
    CHECK(f.condition.find("holds") != std::string::npos);
  }
  // d = 1 < 5/4: only a bracket survives
  auto f = eg2_formula(group_params(2, 3));
  CHECK(f.validity == FormulaResult::Validity::Conditional);
  CHECK(f.value == rat(7, 24));
  CHECK(f.lower == rat(1, 4));
  CHECK(f.condition.find("fails") != std::string::npos);
}

TEST_CASE("sweep rows recognize their template family") {
  {
    auto rep = surgery_sweep("at^2 + 2t^-1", 1, 1, 1, 8);
    REQUIRE(rep.rows.size() == 8);
    for (auto& row : rep.rows) {
      REQUIRE(row.ok);
      CHECK(row.value == rat(1, 2) - rat(1, 2 * row.d));
      REQUIRE(row.have_bracket);
      CHECK(row.lower == row.value);
      CHECK(row.upper == row.value);
      CHECK(row.tight_no_reduction);
    }
    // BS(1,1) collapses before any LP; the rest go through the cycle solver
    CHECK(rep.rows[0].solver == "degenerate");
    CHECK(rep.rows[1].solver == "block");
  }
  {
    // the a-power is read off up to rotation of the two syllables
    auto row = sweep_row("a^3t^2 + 2t^-1", 4, 6, 1, {});
    REQUIRE(row.ok);
    CHECK(row.value == rat(1, 4));
    REQUIRE(row.have_bracket);
    CHECK(row.lower == rat(1, 4));
    CHECK(row.upper == rat(1, 4));
  }
}

TEST_CASE("surgery scaling walks the two-term value toward one half") {
  auto rep = surgery_sweep("at^2At^-1 + t^-1", 2, 3, 2, 6);
  REQUIRE(rep.rows.size() == 5);
  Rat prev(0);
  for (auto& row : rep.rows) {
    REQUIRE(row.ok);
    CHECK(row.value == rat(1, 2) - Rat(Int(5), Int(24 * row.d)));
    CHECK(row.value > prev);
    CHECK(row.value < rat(1, 2));
    REQUIRE(row.have_bracket);
    CHECK(row.lower == row.value);
    CHECK(row.upper == row.value);
    prev = row.value;
  }
}

TEST_CASE("csv rendering and failure rows") {
  auto rep = surgery_sweep("at^2 + 2t^-1", 1, 1, 1, 2);
  auto csv = sweep_csv(rep);
  CHECK(csv.rfind("d,M,L,num,den,solver,vars,pivots,millis\n", 0) == 0);
  CHECK(csv.find("\n2,2,2,1,4,block,") != std::string::npos);

  // a word with nonzero surplus has no null-homologous multiple
  auto row = sweep_row("at", 2, 3, 1, {});
  CHECK_FALSE(row.ok);
  CHECK(row.error == "homology obstruction");
  SweepReport bad;
  bad.rows.push_back(row);
  CHECK(sweep_csv(bad).find(",,error,") != std::string::npos);

  CHECK_THROWS_AS(surgery_sweep("at^2 + 2t^-1", 1, 1, 3, 2), Error);
}
