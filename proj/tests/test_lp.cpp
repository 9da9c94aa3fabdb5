#include <catch2/catch_amalgamated.hpp>

#include "bsscl/lp.hpp"

using namespace bsscl;

static LPModel model(int n, bool maximize) {
  LPModel m;
  m.nvars = n;
  m.maximize = maximize;
  return m;
}

TEST_CASE("simple maximization with certificate") {
  auto m = model(2, true);
  m.objective = {{0, 3}, {1, 2}};
  m.rows.push_back({{{0, 1}, {1, 1}}, Rel::LE, 4});
  m.rows.push_back({{{0, 1}, {1, 3}}, Rel::LE, 6});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == 12);
  CHECK(sol.x[0] == 4);
  CHECK(sol.x[1] == 0);
  std::string why;
  CHECK(lp_verify_optimality(m, sol, &why));
  INFO(why);
}

TEST_CASE("simple minimization") {
  auto m = model(2, false);
  m.objective = {{0, 1}, {1, 1}};
  m.rows.push_back({{{0, 1}, {1, 2}}, Rel::GE, 3});
  m.rows.push_back({{{0, 2}, {1, 1}}, Rel::GE, 3});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == 2);
  CHECK(sol.x[0] == 1);
  CHECK(sol.x[1] == 1);
  std::string why;
  CHECK(lp_verify_optimality(m, sol, &why));
  INFO(why);
}

TEST_CASE("negative right-hand sides and equalities") {
  auto m = model(2, true);
  m.objective = {{0, 1}};
  m.rows.push_back({{{0, 1}, {1, -1}}, Rel::EQ, -1});
  m.rows.push_back({{{0, 1}, {1, 1}}, Rel::LE, 3});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == 1);
  CHECK(sol.x[0] == 1);
  CHECK(sol.x[1] == 2);
  std::string why;
  CHECK(lp_verify_optimality(m, sol, &why));
}

TEST_CASE("fractional data stays exact") {
  auto m = model(2, true);
  m.objective = {{0, Rat(1, 3)}, {1, Rat(1, 7)}};
  m.rows.push_back({{{0, Rat(2, 5)}, {1, 1}}, Rel::LE, Rat(7, 5)});
  m.rows.push_back({{{0, 1}}, Rel::LE, Rat(5, 2)});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  // x0 = 5/2, then x1 = (7/5 - 1)/1 = 2/5
  CHECK(sol.x[0] == Rat(5, 2));
  CHECK(sol.x[1] == Rat(2, 5));
  CHECK(sol.objective == Rat(5, 6) + Rat(2, 35));
  std::string why;
  CHECK(lp_verify_optimality(m, sol, &why));
}

TEST_CASE("infeasibility yields a checkable farkas certificate") {
  auto m = model(1, true);
  m.objective = {{0, 1}};
  m.rows.push_back({{{0, 1}}, Rel::LE, -1});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Infeasible);
  std::string why;
  CHECK(lp_verify_infeasible(m, sol, &why));
  INFO(why);

  auto m2 = model(2, false);
  m2.objective = {{0, 1}};
  m2.rows.push_back({{{0, 1}, {1, 1}}, Rel::EQ, 2});
  m2.rows.push_back({{{0, 1}, {1, 1}}, Rel::EQ, 3});
  auto sol2 = lp_solve(m2);
  REQUIRE(sol2.status == LPStatus::Infeasible);
  CHECK(lp_verify_infeasible(m2, sol2, &why));
}

TEST_CASE("unboundedness is detected") {
  auto m = model(1, true);
  m.objective = {{0, 1}};
  m.rows.push_back({{{0, 1}}, Rel::GE, 1});
  auto sol = lp_solve(m);
  CHECK(sol.status == LPStatus::Unbounded);
}

TEST_CASE("degenerate cycling example terminates") {
  // Beale's classic cycling instance; optimum is -1/20.
  auto m = model(4, false);
  m.objective = {{0, Rat(-3, 4)}, {1, 150}, {2, Rat(-1, 50)}, {3, 6}};
  m.rows.push_back({{{0, Rat(1, 4)}, {1, -60}, {2, Rat(-1, 25)}, {3, 9}}, Rel::LE, 0});
  m.rows.push_back({{{0, Rat(1, 2)}, {1, -90}, {2, Rat(-1, 50)}, {3, 3}}, Rel::LE, 0});
  m.rows.push_back({{{2, 1}}, Rel::LE, 1});
  auto sol = lp_solve(m);
  REQUIRE(sol.status == LPStatus::Optimal);
  CHECK(sol.objective == Rat(-1, 20));
  std::string why;
  CHECK(lp_verify_optimality(m, sol, &why));
}

TEST_CASE("row scaling does not change the optimum") {
  auto m = model(2, true);
  m.objective = {{0, 3}, {1, 2}};
  m.rows.push_back({{{0, 1}, {1, 1}}, Rel::LE, 4});
  m.rows.push_back({{{0, 1}, {1, 3}}, Rel::LE, 6});
  auto m2 = m;
  for (auto& [j, c] : m2.rows[0].coef) c *= Rat(7, 3);
  m2.rows[0].rhs *= Rat(7, 3);
  CHECK(lp_solve(m).objective == lp_solve(m2).objective);
}

TEST_CASE("warm-started column addition") {
  LPModel m;
  m.nvars = 1;
  m.maximize = true;
  m.objective = {{0, 1}};
  m.rows.push_back({{{0, 1}}, Rel::EQ, 1});
  Simplex s(m);
  REQUIRE(s.solve() == LPStatus::Optimal);
  CHECK(s.objective() == 1);
  int id = s.add_column({{0, 1}}, Rat(3));
  REQUIRE(s.solve() == LPStatus::Optimal);
  CHECK(s.objective() == 3);
  CHECK(s.primal()[id] == 1);
  CHECK(s.primal()[0] == 0);
  // duals reflect the better column
  CHECK(s.duals()[0] == 3);
}

TEST_CASE("farkas-guided column generation pattern") {
  LPModel m;
  m.nvars = 0;
  m.maximize = true;
  m.rows.push_back({{}, Rel::EQ, 1});
  m.rows.push_back({{}, Rel::EQ, 1});
  Simplex s(m);
  REQUIRE(s.solve() == LPStatus::Infeasible);
  auto z = s.farkas();
  // the certificate prices a covering column positively
  Rat price = z[0] + z[1];
  CHECK(price > 0);
  s.add_column({{0, 1}, {1, 1}}, Rat(1));
  REQUIRE(s.solve() == LPStatus::Optimal);
  CHECK(s.objective() == 1);
}

TEST_CASE("dump is readable") {
  auto m = model(2, true);
  m.objective = {{0, 3}, {1, Rat(1, 2)}};
  m.rows.push_back({{{0, 1}, {1, 2}}, Rel::LE, Rat(5, 2)});
  auto text = lp_dump(m);
  CHECK(text.find("max 3 x0 + 1/2 x1") != std::string::npos);
  CHECK(text.find("<= 5/2") != std::string::npos);
}
