#pragma once

// Exact arithmetic aliases and small helpers shared by the whole library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsscl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat(long long n, long long d = 1) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(n), Int(d));
}

// x^e for integer e of either sign; x must be nonzero when e < 0.
inline Rat rat_pow(const Rat& x, long long e) {
  if (e == 0) return Rat(1);
  Rat base = x;
  bool inv = e < 0;
  unsigned long long k = inv ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                             : static_cast<unsigned long long>(e);
  Rat acc(1);
  while (k) {
    if (k & 1ull) acc *= base;
    base *= base;
    k >>= 1;
  }
  if (inv) {
    if (acc == 0) throw std::domain_error("zero to negative power");
    acc = Rat(1) / acc;
  }
  return acc;
}

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return int_abs(a / int_gcd(a, b) * b);
}

// Nonnegative representative of x mod m, m > 0.
inline Int mod_pos(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline long long to_ll(const Int& x) {
  if (x > Int(INT64_MAX) || x < Int(INT64_MIN))
    throw std::overflow_error("integer exceeds 64-bit range");
  return static_cast<long long>(x);
}

// "p/q" or "p" with optional sign; throws std::invalid_argument on junk.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

// Error taxonomy; the CLI maps these onto exit codes.
enum class ErrKind { Parse, Homology, Resource, Unsupported, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

}  // namespace bsscl
