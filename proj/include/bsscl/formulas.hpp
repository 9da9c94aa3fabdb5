#pragma once

// Closed-form values for the worked families, exposed as fast oracles with
// explicit validity conditions.

#include "words.hpp"

#include <algorithm>
#include <string>

namespace bsscl {

struct FormulaResult {
  Rat value;  // the exact value, or the upper end of the bracket
  enum class Validity { Exact, UpperBound, Conditional } validity = Validity::Exact;
  Rat lower;  // set when Conditional
  std::string condition;
};

namespace detail {
inline bool solvable_group(const GroupParams& G) {
  return G.M == 1 || G.M == -1 || G.L == 1 || G.L == -1;
}
inline FormulaResult zero_formula() {
  FormulaResult r;
  r.value = 0;
  r.condition = "|M| = 1 or |L| = 1: the group is solvable, scl vanishes";
  return r;
}
}  // namespace detail

// scl(a^k t^2 + 2 t^-1) = 1/2 - gcd(|k|, d) / (2d)
inline FormulaResult eg1_formula(const GroupParams& G, long long k) {
  Int g = int_gcd(int_abs(Int(k)), G.d);
  FormulaResult r;
  r.value = rat(1, 2) - Rat(g, Int(2 * G.d));
  r.condition = "valid for every k and (M, L)";
  return r;
}

// scl(a t a^-1 t^-1) = (1 - 1/|M| - 1/|L|) / 2
inline FormulaResult talt_product_formula(const GroupParams& G) {
  if (detail::solvable_group(G)) return detail::zero_formula();
  FormulaResult r;
  Int am = int_abs(G.M), al = int_abs(G.L);
  r.value = (Rat(1) - Rat(Int(1), am) - Rat(Int(1), al)) / 2;
  r.condition = "valid for |M|, |L| >= 2";
  return r;
}

// scl(a t a t^-1 a^-1 t a^-1 t^-1) = 1/2 - 1/min(|M|, |L|)
inline FormulaResult talt_commutator_formula(const GroupParams& G) {
  if (detail::solvable_group(G)) return detail::zero_formula();
  FormulaResult r;
  Int mn = std::min(int_abs(G.M), int_abs(G.L));
  r.value = rat(1, 2) - Rat(Int(1), mn);
  r.condition = "valid for |M|, |L| >= 2";
  return r;
}

// scl(a t^2 a^-1 t^-1 + t^-1) = 1/2 - 1/(4|M|) - 1/(4|L|) when
// d >= (|M| + |L|) / (2 min(|M|, |L|)); otherwise that value is only an upper
// bound and 1/2 - 1/(2 min(|M|, |L|)) bounds from below.
inline FormulaResult eg2_formula(const GroupParams& G) {
  if (detail::solvable_group(G)) return detail::zero_formula();
  FormulaResult r;
  Int am = int_abs(G.M), al = int_abs(G.L);
  Int mn = std::min(am, al);
  r.value = rat(1, 2) - Rat(Int(1), 4 * am) - Rat(Int(1), 4 * al);
  Rat need = Rat(am + al, 2 * mn);
  if (Rat(G.d) >= need) {
    r.condition = "condition d>=" + rat_str(need) + " holds";
  } else {
    r.validity = FormulaResult::Validity::Conditional;
    r.lower = rat(1, 2) - Rat(Int(1), 2 * mn);
    r.condition = "condition d>=" + rat_str(need) + " fails; value in [" + rat_str(r.lower) +
                  ", " + rat_str(r.value) + "]";
  }
  return r;
}

}  // namespace bsscl
