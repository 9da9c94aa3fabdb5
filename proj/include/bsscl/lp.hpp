#pragma once

// Exact rational linear programming: dense two-phase primal simplex with
// Bland anti-cycling (Dantzig fast path until degeneracy is detected),
// incremental column addition for column generation, dual extraction, and an
// independent certificate checker.

#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace bsscl {

enum class Rel { EQ, LE, GE };

struct LPRow {
  std::vector<std::pair<int, Rat>> coef;  // (var, coefficient), vars 0-based
  Rel rel = Rel::EQ;
  Rat rhs;
};

struct LPModel {
  int nvars = 0;
  std::vector<LPRow> rows;
  std::vector<std::pair<int, Rat>> objective;
  bool maximize = true;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

class Simplex {
 public:
  explicit Simplex(const LPModel& model) : maximize_(model.maximize) {
    m_ = static_cast<int>(model.rows.size());
    nstruct_ = model.nvars;
    flip_.assign(m_, Rat(1));
    rel_.resize(m_);
    obj_.assign(nstruct_, Rat(0));
    for (auto& [j, c] : model.objective) obj_[j] = c;

    // Column layout: structural | one slack per inequality | one artificial per row.
    nslack_ = 0;
    for (auto& r : model.rows)
      if (r.rel != Rel::EQ) ++nslack_;
    art_base_ = nstruct_ + nslack_;
    ncols_ = art_base_ + m_;

    T_.assign(m_, std::vector<Rat>(ncols_, Rat(0)));
    b_.assign(m_, Rat(0));
    basis_.assign(m_, -1);
    struct_of_col_.assign(ncols_, -1);
    for (int j = 0; j < nstruct_; ++j) struct_of_col_[j] = j;
    int slack = nstruct_;
    for (int i = 0; i < m_; ++i) {
      const LPRow& r = model.rows[i];
      rel_[i] = r.rel;
      for (auto& [j, c] : r.coef) T_[i][j] += c;
      Rat rhs = r.rhs;
      Rat sgn = 1;
      if (r.rel == Rel::LE) sgn = 1;
      else if (r.rel == Rel::GE) sgn = -1;
      if (r.rel != Rel::EQ) T_[i][slack] = sgn;
      if (rhs < 0) {
        for (int j = 0; j < ncols_; ++j)
          if (T_[i][j] != 0) T_[i][j] = -T_[i][j];
        rhs = -rhs;
        flip_[i] = -1;
      }
      b_[i] = rhs;
      T_[i][art_base_ + i] = 1;
      basis_[i] = art_base_ + i;
      if (r.rel != Rel::EQ) ++slack;
    }
    phase_ = 1;
    load_costs(true);
  }

  LPStatus solve() {
    if (phase_ == 1) {
      if (!phase1_costs_) load_costs(true);
      bool ok = run();
      if (!ok) throw Error(ErrKind::Internal, "phase-1 objective unbounded");
      if (objv_ > 0) {
        status_ = LPStatus::Infeasible;
        extract_farkas();
        return status_;
      }
      drive_out_artificials();
      phase_ = 2;
      load_costs(false);
    }
    bool ok = run();
    status_ = ok ? LPStatus::Optimal : LPStatus::Unbounded;
    if (ok) extract_duals();
    return status_;
  }

  // Append a structural column (with objective coefficient c).  Usable between
  // solve() calls; returns the new variable id.  The tableau column and its
  // reduced cost under the currently loaded phase costs are computed
  // incrementally, so the warm basis is kept.
  int add_column(const std::vector<std::pair<int, Rat>>& a, const Rat& c) {
    std::vector<Rat> dense(m_, Rat(0));
    for (auto& [i, v] : a) dense[i] += flip_[i] * v;
    // Current tableau column = B^-1 * a, via the artificial block (initial identity).
    std::vector<Rat> col(m_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      Rat acc = 0;
      for (int k = 0; k < m_; ++k)
        if (dense[k] != 0) acc += T_[i][art_base_ + k] * dense[k];
      col[i] = acc;
    }
    int id = nstruct_++;
    obj_.push_back(c);
    for (int i = 0; i < m_; ++i) T_[i].push_back(col[i]);
    struct_of_col_.push_back(id);
    ++ncols_;
    Rat red = phase1_costs_ ? Rat(0) : (maximize_ ? Rat(-c) : c);
    for (int i = 0; i < m_; ++i) {
      Rat cb = min_cost(basis_[i]);
      if (cb != 0 && col[i] != 0) red -= cb * col[i];
    }
    r_.push_back(red);
    // Re-open phase 1 if we were sitting on an infeasibility verdict.
    if (status_ == LPStatus::Infeasible) phase_ = 1;
    return id;
  }

  LPStatus status() const { return status_; }
  long long pivots() const { return pivots_; }

  Rat objective() const { return maximize_ ? Rat(-objv_) : objv_; }

  std::vector<Rat> primal() const {
    std::vector<Rat> x(nstruct_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      int j = basis_[i];
      int sj = struct_of(j);
      if (sj >= 0) x[sj] = b_[i];
    }
    return x;
  }

  // Duals in the model's own orientation (see lp_verify_optimality).
  std::vector<Rat> duals() const { return y_; }
  // Farkas certificate when Infeasible: z with z^T A_j <= 0 for every present
  // column, z^T b > 0, z <= 0 on LE rows, z >= 0 on GE rows.
  std::vector<Rat> farkas() const { return z_; }

 private:
  int m_ = 0, nstruct_ = 0, nslack_ = 0, art_base_ = 0, ncols_ = 0;
  bool maximize_ = true;
  std::vector<std::vector<Rat>> T_;
  std::vector<Rat> b_;
  std::vector<Rat> obj_;      // per structural var, model orientation
  std::vector<Rat> flip_;     // row scaling applied on input (+-1)
  std::vector<Rel> rel_;
  std::vector<int> basis_;
  std::vector<int> struct_of_col_;  // tableau column -> structural var or -1
  std::vector<Rat> r_;        // reduced costs, current phase (min orientation)
  Rat objv_;                  // current phase objective (min orientation)
  int phase_ = 1;
  bool phase1_costs_ = false;
  LPStatus status_ = LPStatus::Infeasible;
  long long pivots_ = 0;
  long long degen_streak_ = 0;
  bool bland_ = false;
  std::vector<Rat> y_, z_;

  // Structural var of tableau column c, or -1 for slack/artificial columns.
  int struct_of(int c) const { return c < static_cast<int>(struct_of_col_.size()) ? struct_of_col_[c] : -1; }
  bool is_artificial(int c) const { return c >= art_base_ && c < art_base_ + m_; }

  Rat min_cost(int tabcol) const {
    if (phase1_costs_) return is_artificial(tabcol) ? Rat(1) : Rat(0);
    int sj = struct_of(tabcol);
    if (sj < 0) return Rat(0);
    return maximize_ ? Rat(-obj_[sj]) : obj_[sj];
  }

  void load_costs(bool phase1) {
    phase1_costs_ = phase1;
    r_.assign(ncols_, Rat(0));
    for (int j = 0; j < ncols_; ++j) r_[j] = min_cost(j);
    objv_ = 0;
    for (int i = 0; i < m_; ++i) {
      Rat cb = min_cost(basis_[i]);
      if (cb == 0) continue;
      objv_ += cb * b_[i];
      for (int j = 0; j < ncols_; ++j)
        if (T_[i][j] != 0) r_[j] -= cb * T_[i][j];
    }
  }

  bool allowed_entering(int j) const {
    if (is_artificial(j)) return false;  // artificials never re-enter
    return true;
  }

  // Returns false on unbounded.
  bool run() {
    const long long max_pivots = 20'000'000;
    while (true) {
      int enter = -1;
      if (bland_) {
        for (int j = 0; j < ncols_; ++j)
          if (allowed_entering(j) && r_[j] < 0) {
            enter = j;
            break;
          }
      } else {
        Rat best = 0;
        for (int j = 0; j < ncols_; ++j)
          if (allowed_entering(j) && r_[j] < best) {
            best = r_[j];
            enter = j;
          }
      }
      if (enter < 0) return true;  // phase optimum
      // Zero-level basic artificials mark rows that were redundant when the
      // basis was formed; a column added later may touch them with either
      // sign, and the artificial must be pivoted out at ratio zero or the
      // equality row goes silently slack.
      int leave = -1;
      Rat best_ratio;
      bool leave_art = false;
      for (int i = 0; i < m_; ++i) {
        if (is_artificial(basis_[i]) && b_[i] == 0 && T_[i][enter] != 0) {
          if (!leave_art || basis_[i] < basis_[leave]) {
            leave = i;
            best_ratio = 0;
            leave_art = true;
          }
        }
      }
      for (int i = 0; i < m_ && !leave_art; ++i) {
        if (T_[i][enter] <= 0) continue;
        Rat ratio = b_[i] / T_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      if (best_ratio == 0) {
        if (++degen_streak_ > 60) bland_ = true;
      } else {
        degen_streak_ = 0;
      }
      pivot(leave, enter);
      if (++pivots_ > max_pivots) throw Error(ErrKind::Internal, "pivot limit exceeded");
    }
  }

  void pivot(int prow, int pcol) {
    Rat pv = T_[prow][pcol];
    if (pv == 0) throw Error(ErrKind::Internal, "zero pivot");
    std::vector<Rat>& row = T_[prow];
    if (pv != 1) {
      for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0) row[j] /= pv;
      b_[prow] /= pv;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == prow) continue;
      Rat f = T_[i][pcol];
      if (f == 0) continue;
      std::vector<Rat>& ri = T_[i];
      for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0) ri[j] -= f * row[j];
      b_[i] -= f * b_[prow];
    }
    Rat f = r_[pcol];
    if (f != 0) {
      for (int j = 0; j < ncols_; ++j)
        if (row[j] != 0) r_[j] -= f * row[j];
      objv_ += f * b_[prow];
    }
    basis_[prow] = pcol;
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      int pick = -1;
      for (int j = 0; j < ncols_ && pick < 0; ++j)
        if (!is_artificial(j) && T_[i][j] != 0) pick = j;
      if (pick >= 0) {
        pivot(i, pick);
        ++pivots_;
      }
      // Redundant row: artificial stays basic at level zero.
    }
  }

  void extract_duals() {
    // Internal min-orientation duals: y_int_i = -r[artificial_i] (cost 0).
    y_.assign(m_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      Rat yi = -r_[art_base_ + i];
      y_[i] = (maximize_ ? Rat(-1) : Rat(1)) * flip_[i] * yi;
    }
  }

  void extract_farkas() {
    z_.assign(m_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      Rat yi = Rat(1) - r_[art_base_ + i];  // phase-1 artificial cost is 1
      z_[i] = flip_[i] * yi;
    }
  }
};

// Floating-point twin of Simplex.  Used as a presolver that guesses which
// columns matter before an exact run; its verdicts are advisory only and every
// consumer must confirm them in exact arithmetic.
class FloatSimplex {
 public:
  FloatSimplex(const std::vector<LPRow>& rows, bool maximize) : maximize_(maximize) {
    m_ = static_cast<int>(rows.size());
    flip_.assign(m_, 1.0);
    nslack_ = 0;
    for (auto& r : rows)
      if (r.rel != Rel::EQ) ++nslack_;
    art_base_ = nslack_;  // no structural columns yet
    ncols_ = art_base_ + m_;
    T_.assign(m_, std::vector<double>(ncols_, 0.0));
    b_.assign(m_, 0.0);
    basis_.assign(m_, -1);
    struct_of_col_.assign(ncols_, -1);
    int slack = 0;
    for (int i = 0; i < m_; ++i) {
      double rhs = rows[i].rhs.convert_to<double>();
      if (rows[i].rel != Rel::EQ) {
        T_[i][slack] = rows[i].rel == Rel::LE ? 1.0 : -1.0;
        ++slack;
      }
      if (rhs < 0) {
        for (int j = 0; j < ncols_; ++j) T_[i][j] = -T_[i][j];
        rhs = -rhs;
        flip_[i] = -1.0;
      }
      b_[i] = rhs;
      T_[i][art_base_ + i] = 1.0;
      basis_[i] = art_base_ + i;
    }
    load_phase1();
  }

  int add_column(const std::vector<std::pair<int, double>>& a, double c) {
    std::vector<double> dense(m_, 0.0);
    for (auto& [i, v] : a) dense[i] += flip_[i] * v;
    std::vector<double> col(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      double acc = 0;
      for (int k = 0; k < m_; ++k)
        if (dense[k] != 0) acc += T_[i][art_base_ + k] * dense[k];
      col[i] = acc;
    }
    int id = static_cast<int>(obj_.size());
    obj_.push_back(c);
    for (int i = 0; i < m_; ++i) T_[i].push_back(col[i]);
    struct_of_col_.push_back(id);
    ++ncols_;
    double red = phase1_ ? 0.0 : (maximize_ ? -c : c);
    for (int i = 0; i < m_; ++i) {
      double cb = min_cost(basis_[i]);
      if (cb != 0) red -= cb * col[i];
    }
    r_.push_back(red);
    if (status_ == LPStatus::Infeasible) phase_restart_ = true;
    return id;
  }

  LPStatus solve() {
    if (phase_restart_) {
      phase1_ = true;
      phase_restart_ = false;
      load_phase1();
    }
    if (phase1_) {
      if (!run()) return finish(LPStatus::Unbounded);
      if (objv_ > feas_eps_) return finish(LPStatus::Infeasible);
      drive_out_artificials();
      phase1_ = false;
      load_phase2();
    }
    if (!run()) return finish(LPStatus::Unbounded);
    return finish(LPStatus::Optimal);
  }

  bool reliable() const { return reliable_; }

  std::vector<double> primal() const {
    std::vector<double> x(obj_.size(), 0.0);
    for (int i = 0; i < m_; ++i) {
      int sj = struct_of(basis_[i]);
      if (sj >= 0) x[sj] = b_[i];
    }
    return x;
  }

  // Pricing vector: duals at an optimum, a Farkas-style ray when infeasible.
  std::vector<double> prices() const {
    std::vector<double> y(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (status_ == LPStatus::Optimal) {
        y[i] = (maximize_ ? -1.0 : 1.0) * flip_[i] * -r_[art_base_ + i];
      } else {
        y[i] = flip_[i] * (1.0 - r_[art_base_ + i]);
      }
    }
    return y;
  }

 private:
  static constexpr double eps_ = 1e-9;
  static constexpr double feas_eps_ = 1e-7;
  int m_ = 0, nslack_ = 0, art_base_ = 0, ncols_ = 0;
  bool maximize_ = true;
  bool phase1_ = true, phase_restart_ = false;
  bool reliable_ = true;
  std::vector<std::vector<double>> T_;
  std::vector<double> b_, obj_, flip_, r_;
  std::vector<int> basis_, struct_of_col_;
  double objv_ = 0;
  LPStatus status_ = LPStatus::Infeasible;
  long long pivots_ = 0, degen_streak_ = 0;
  bool bland_ = false;

  int struct_of(int c) const {
    if (c < nslack_) return -1;
    if (c >= art_base_ && c < art_base_ + m_) return -1;
    return struct_of_col_[c];
  }
  bool is_artificial(int c) const { return c >= art_base_ && c < art_base_ + m_; }

  double min_cost(int tabcol) const {
    if (phase1_) return is_artificial(tabcol) ? 1.0 : 0.0;
    int sj = struct_of(tabcol);
    if (sj < 0) return 0.0;
    return maximize_ ? -obj_[sj] : obj_[sj];
  }

  void load_costs() {
    r_.assign(ncols_, 0.0);
    for (int j = 0; j < ncols_; ++j) r_[j] = min_cost(j);
    objv_ = 0;
    for (int i = 0; i < m_; ++i) {
      double cb = min_cost(basis_[i]);
      if (cb == 0) continue;
      objv_ += cb * b_[i];
      for (int j = 0; j < ncols_; ++j)
        if (T_[i][j] != 0) r_[j] -= cb * T_[i][j];
    }
  }
  void load_phase1() { phase1_ = true; load_costs(); }
  void load_phase2() { phase1_ = false; load_costs(); }

  LPStatus finish(LPStatus st) {
    status_ = st;
    return st;
  }

  bool run() {
    const long long cap = 400'000;
    while (true) {
      int enter = -1;
      if (bland_) {
        for (int j = 0; j < ncols_; ++j)
          if (!is_artificial(j) && r_[j] < -eps_) {
            enter = j;
            break;
          }
      } else {
        double best = -eps_;
        for (int j = 0; j < ncols_; ++j)
          if (!is_artificial(j) && r_[j] < best) {
            best = r_[j];
            enter = j;
          }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = 0;
      bool leave_art = false;
      for (int i = 0; i < m_; ++i) {
        if (is_artificial(basis_[i]) && std::abs(b_[i]) <= eps_ && std::abs(T_[i][enter]) > eps_) {
          if (!leave_art || basis_[i] < basis_[leave]) {
            leave = i;
            best_ratio = 0;
            leave_art = true;
          }
        }
      }
      for (int i = 0; i < m_ && !leave_art; ++i) {
        if (T_[i][enter] <= eps_) continue;
        double ratio = b_[i] / T_[i][enter];
        if (leave < 0 || ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      if (best_ratio <= eps_) {
        if (++degen_streak_ > 200) bland_ = true;
      } else {
        degen_streak_ = 0;
      }
      pivot(leave, enter);
      if (++pivots_ > cap) {
        reliable_ = false;
        return true;  // give up gracefully; caller must check reliable()
      }
    }
  }

  void pivot(int prow, int pcol) {
    std::vector<double>& row = T_[prow];
    double pv = row[pcol];
    if (pv != 1.0) {
      double inv = 1.0 / pv;
      for (int j = 0; j < ncols_; ++j) row[j] *= inv;
      b_[prow] *= inv;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == prow) continue;
      double f = T_[i][pcol];
      if (f == 0) continue;
      std::vector<double>& ri = T_[i];
      for (int j = 0; j < ncols_; ++j) ri[j] -= f * row[j];
      ri[pcol] = 0;
      b_[i] -= f * b_[prow];
      if (b_[i] < 0 && b_[i] > -1e-11) b_[i] = 0;
    }
    double f = r_[pcol];
    if (f != 0) {
      for (int j = 0; j < ncols_; ++j) r_[j] -= f * row[j];
      r_[pcol] = 0;
      objv_ += f * b_[prow];
    }
    basis_[prow] = pcol;
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      int pick = -1;
      for (int j = 0; j < ncols_ && pick < 0; ++j)
        if (!is_artificial(j) && std::abs(T_[i][j]) > eps_) pick = j;
      if (pick >= 0) {
        pivot(i, pick);
        ++pivots_;
      }
    }
  }
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat objective;
  std::vector<Rat> x;
  std::vector<Rat> y;       // duals (Optimal)
  std::vector<Rat> farkas;  // infeasibility certificate (Infeasible)
  long long pivots = 0;
};

inline LPSolution lp_solve(const LPModel& model) {
  Simplex s(model);
  LPSolution out;
  out.status = s.solve();
  out.pivots = s.pivots();
  if (out.status == LPStatus::Optimal) {
    out.objective = s.objective();
    out.x = s.primal();
    out.y = s.duals();
  } else if (out.status == LPStatus::Infeasible) {
    out.farkas = s.farkas();
  }
  return out;
}

// Exact certificate check: primal feasibility, dual feasibility (with the
// sign conventions of the model's orientation), complementary slackness and
// strong duality.  Returns true iff everything holds exactly.
inline bool lp_verify_optimality(const LPModel& model, const LPSolution& sol,
                                 std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sol.status != LPStatus::Optimal) return fail("solution is not optimal-status");
  if (static_cast<int>(sol.x.size()) < model.nvars) return fail("primal vector too short");
  if (sol.y.size() != model.rows.size()) return fail("dual vector size mismatch");
  for (int j = 0; j < model.nvars; ++j)
    if (sol.x[j] < 0) return fail("negative primal variable");
  std::vector<Rat> act(model.rows.size(), Rat(0));
  for (size_t i = 0; i < model.rows.size(); ++i) {
    for (auto& [j, c] : model.rows[i].coef) act[i] += c * sol.x[j];
    const LPRow& r = model.rows[i];
    if (r.rel == Rel::EQ && act[i] != r.rhs) return fail("equality row violated");
    if (r.rel == Rel::LE && act[i] > r.rhs) return fail("<= row violated");
    if (r.rel == Rel::GE && act[i] < r.rhs) return fail(">= row violated");
    // dual sign conventions
    const Rat& yi = sol.y[i];
    if (model.maximize) {
      if (r.rel == Rel::LE && yi < 0) return fail("dual sign on <= row");
      if (r.rel == Rel::GE && yi > 0) return fail("dual sign on >= row");
    } else {
      if (r.rel == Rel::LE && yi > 0) return fail("dual sign on <= row");
      if (r.rel == Rel::GE && yi < 0) return fail("dual sign on >= row");
    }
    // complementary slackness: y_i != 0 => row tight
    if (yi != 0 && act[i] != r.rhs) return fail("complementary slackness (row)");
  }
  std::vector<Rat> c(model.nvars, Rat(0));
  for (auto& [j, v] : model.objective) c[j] = v;
  std::vector<Rat> yA(model.nvars, Rat(0));
  for (size_t i = 0; i < model.rows.size(); ++i)
    for (auto& [j, v] : model.rows[i].coef) yA[j] += sol.y[i] * v;
  Rat primal_obj = 0;
  for (int j = 0; j < model.nvars; ++j) primal_obj += c[j] * sol.x[j];
  for (int j = 0; j < model.nvars; ++j) {
    if (model.maximize) {
      if (yA[j] < c[j]) return fail("dual feasibility (max)");
      if (sol.x[j] > 0 && yA[j] != c[j]) return fail("complementary slackness (var)");
    } else {
      if (yA[j] > c[j]) return fail("dual feasibility (min)");
      if (sol.x[j] > 0 && yA[j] != c[j]) return fail("complementary slackness (var)");
    }
  }
  Rat dual_obj = 0;
  for (size_t i = 0; i < model.rows.size(); ++i) dual_obj += sol.y[i] * model.rows[i].rhs;
  if (dual_obj != primal_obj) return fail("strong duality gap");
  if (sol.objective != primal_obj) return fail("reported objective mismatch");
  return true;
}

// Farkas certificate check for an Infeasible verdict.
inline bool lp_verify_infeasible(const LPModel& model, const LPSolution& sol,
                                 std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sol.status != LPStatus::Infeasible) return fail("solution is not infeasible-status");
  if (sol.farkas.size() != model.rows.size()) return fail("farkas size mismatch");
  std::vector<Rat> zA(model.nvars, Rat(0));
  Rat zb = 0;
  for (size_t i = 0; i < model.rows.size(); ++i) {
    const Rat& zi = sol.farkas[i];
    if (model.rows[i].rel == Rel::LE && zi > 0) return fail("farkas sign on <= row");
    if (model.rows[i].rel == Rel::GE && zi < 0) return fail("farkas sign on >= row");
    for (auto& [j, v] : model.rows[i].coef) zA[j] += zi * v;
    zb += zi * model.rows[i].rhs;
  }
  for (int j = 0; j < model.nvars; ++j)
    if (zA[j] > 0) return fail("farkas column condition violated");
  if (zb <= 0) return fail("farkas rhs condition violated");
  return true;
}

inline std::string lp_dump(const LPModel& model) {
  std::string out = model.maximize ? "max" : "min";
  bool first = true;
  for (auto& [j, c] : model.objective) {
    out += first ? " " : " + ";
    out += rat_str(c) + " x" + std::to_string(j);
    first = false;
  }
  out += "\n";
  for (size_t i = 0; i < model.rows.size(); ++i) {
    out += "r" + std::to_string(i) + ":";
    for (auto& [j, c] : model.rows[i].coef)
      out += " + " + rat_str(c) + " x" + std::to_string(j);
    const char* rel = model.rows[i].rel == Rel::EQ ? " = " : model.rows[i].rel == Rel::LE ? " <= " : " >= ";
    out += rel + rat_str(model.rows[i].rhs) + "\n";
  }
  return out;
}

}  // namespace bsscl
