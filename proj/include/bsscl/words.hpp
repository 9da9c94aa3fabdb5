#pragma once

// Words and chains in the Baumslag-Solitar group BS(M,L) = <a,t | a^M = t a^L t^-1>.
//
// A hyperbolic (non-elliptic) word is stored as a cyclic sequence of syllables
// a^{p_1} t^{e_1} ... a^{p_n} t^{e_n} with e_i = +-1, kept Britton-cyclically
// reduced ("tight"): no subword t a^{kL} t^-1 or t^-1 a^{kM} t survives, even
// across the wrap-around.

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsscl {

struct GroupParams {
  long long M = 0, L = 0;  // defining exponents, both nonzero
  long long d = 0;         // gcd(|M|, |L|)
  long long m = 0, l = 0;  // M/d, L/d
};

inline GroupParams group_params(long long M, long long L) {
  if (M == 0 || L == 0) throw Error(ErrKind::Parse, "M and L must be nonzero");
  GroupParams g;
  g.M = M;
  g.L = L;
  long long am = M < 0 ? -M : M, al = L < 0 ? -L : L;
  long long a = am, b = al;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  g.d = a;
  g.m = M / g.d;
  g.l = L / g.d;
  return g;
}

struct Syllable {
  Int p;        // exponent of the a-block preceding the t-letter
  int eps = 1;  // +1 for t, -1 for t^-1
  bool operator==(const Syllable& o) const { return p == o.p && eps == o.eps; }
};

struct TightWord {
  std::vector<Syllable> syl;  // nonempty, Britton-cyclically reduced
  size_t size() const { return syl.size(); }
  bool operator==(const TightWord& o) const { return syl == o.syl; }
};

inline Int h_value(const TightWord& w) {
  Int h = 0;
  for (auto& s : w.syl) h += s.eps;
  return h;
}

// ---------------------------------------------------------------------------
// Parsing: letter strings over a/A/t/T with optional ^exponents.

namespace detail {

struct LetterToken {
  char gen;  // 'a' or 't'
  Int exp;   // signed
};

inline std::vector<LetterToken> tokenize_word(const std::string& text) {
  std::vector<LetterToken> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    char gen;
    Int sign;
    if (c == 'a' || c == 'A') {
      gen = 'a';
      sign = (c == 'a') ? 1 : -1;
    } else if (c == 't' || c == 'T') {
      gen = 't';
      sign = (c == 't') ? 1 : -1;
    } else {
      throw Error(ErrKind::Parse, std::string("unexpected character '") + c + "' in word");
    }
    ++i;
    Int exp = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
      if (digits.empty()) throw Error(ErrKind::Parse, "missing exponent after '^'");
      exp = Int(digits);
      if (neg) exp = -exp;
    }
    out.push_back({gen, sign * exp});
    skip_ws();
  }
  return out;
}

// Fold letter tokens into raw syllables; a trailing a-block wraps onto the
// leading one (words are cyclic).  Returns syllables plus the pure a-power if
// the word has no t-letters at all.
struct RawWord {
  std::vector<Syllable> syl;
  Int pure_a = 0;  // meaningful only when syl is empty
};

inline RawWord fold_tokens(const std::vector<LetterToken>& toks) {
  RawWord rw;
  Int acc = 0;
  for (auto& tk : toks) {
    if (tk.gen == 'a') {
      acc += tk.exp;
      continue;
    }
    if (tk.exp == 0) continue;
    int step = tk.exp > 0 ? 1 : -1;
    Int cnt = int_abs(tk.exp);
    for (Int j = 0; j < cnt; ++j) {
      rw.syl.push_back({acc, step});
      acc = 0;
    }
  }
  if (rw.syl.empty()) {
    rw.pure_a = acc;
  } else if (acc != 0) {
    rw.syl.front().p += acc;  // cyclic fold of the trailing a-block
  }
  return rw;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Britton cyclic reduction.

struct ReduceResult {
  bool elliptic = false;  // conjugate to a power of a
  Int elliptic_power = 0;
  TightWord word;         // valid when !elliptic
  int pinches = 0;        // number of pinch moves applied
};

// Reduce a raw cyclic syllable word.  Each pinch t a^{kL} t^-1 -> a^{kM}
// (resp. t^-1 a^{kM} t -> a^{kL}) removes two t-letters and merges the three
// adjacent a-blocks.
inline ReduceResult britton_cyclic_reduce(std::vector<Syllable> syl, const GroupParams& G) {
  ReduceResult res;
  Int stray = 0;  // a-power accumulated if everything cancels
  bool changed = true;
  while (changed) {
    changed = false;
    size_t n = syl.size();
    if (n == 0) break;
    for (size_t i = 0; i < n; ++i) {
      size_t j = (i + 1) % n;
      const Syllable& si = syl[i];
      const Syllable& sj = syl[j];
      bool pinch = false;
      Int merged;  // image of the pinched a-block
      if (si.eps == 1 && sj.eps == -1 && sj.p % G.L == 0) {
        merged = sj.p / G.L * G.M;
        pinch = true;
      } else if (si.eps == -1 && sj.eps == 1 && sj.p % G.M == 0) {
        merged = sj.p / G.M * G.L;
        pinch = true;
      }
      if (!pinch) continue;
      ++res.pinches;
      if (n == 2) {
        stray = si.p + merged;
        syl.clear();
      } else {
        size_t k = (j + 1) % n;
        syl[k].p += si.p + merged;
        // erase positions i and j (j = i+1 mod n)
        if (j == (i + 1)) {
          syl.erase(syl.begin() + i, syl.begin() + i + 2);
        } else {  // wrap: j == 0, i == n-1
          syl.erase(syl.begin() + i);
          syl.erase(syl.begin());
        }
      }
      changed = true;
      break;
    }
  }
  if (syl.empty()) {
    res.elliptic = true;
    res.elliptic_power = stray;
  } else {
    res.word.syl = std::move(syl);
  }
  return res;
}

inline ReduceResult parse_word(const std::string& text, const GroupParams& G) {
  auto raw = detail::fold_tokens(detail::tokenize_word(text));
  if (raw.syl.empty()) {
    ReduceResult res;
    res.elliptic = true;
    res.elliptic_power = raw.pure_a;
    return res;
  }
  return britton_cyclic_reduce(std::move(raw.syl), G);
}

// ---------------------------------------------------------------------------
// Word operations.

inline std::string word_str(const TightWord& w) {
  std::string out;
  for (auto& s : w.syl) {
    if (s.p == 1) {
      out += "a";
    } else if (s.p == -1) {
      out += "A";
    } else if (s.p != 0) {
      out += "a^" + s.p.str();
    }
    out += (s.eps == 1) ? "t" : "T";
  }
  return out;
}

inline TightWord word_power(const TightWord& w, long long k, const GroupParams& G) {
  if (k <= 0) throw Error(ErrKind::Parse, "word power must be positive");
  std::vector<Syllable> syl;
  syl.reserve(w.syl.size() * static_cast<size_t>(k));
  for (long long i = 0; i < k; ++i) syl.insert(syl.end(), w.syl.begin(), w.syl.end());
  auto red = britton_cyclic_reduce(std::move(syl), G);
  if (red.elliptic) throw Error(ErrKind::Internal, "power of a tight word became elliptic");
  return red.word;
}

inline TightWord word_inverse(const TightWord& w, const GroupParams& G) {
  // (a^{p_1} t^{e_1} ... a^{p_n} t^{e_n})^-1 = t^{-e_n} a^{-p_n} ... t^{-e_1} a^{-p_1};
  // rotate the trailing a-block to the front to restore syllable form.
  std::vector<Syllable> syl;
  size_t n = w.syl.size();
  for (size_t i = 0; i < n; ++i) {
    const Syllable& src = w.syl[n - 1 - i];            // t-letter to invert
    const Syllable& nxt = w.syl[(n - i) % n];          // a-block cyclically after it
    syl.push_back({-nxt.p, -src.eps});
  }
  auto red = britton_cyclic_reduce(std::move(syl), G);
  if (red.elliptic) throw Error(ErrKind::Internal, "inverse of a tight word became elliptic");
  return red.word;
}

// Lexicographically minimal rotation of the syllable list; used only for
// equality/merging so that user-facing storage keeps the parsed rotation.
inline std::vector<Syllable> canonical_rotation(const TightWord& w) {
  size_t n = w.syl.size();
  auto rot_less = [&](size_t r1, size_t r2) {
    for (size_t k = 0; k < n; ++k) {
      const Syllable& x = w.syl[(r1 + k) % n];
      const Syllable& y = w.syl[(r2 + k) % n];
      if (x.p != y.p) return x.p < y.p;
      if (x.eps != y.eps) return x.eps < y.eps;
    }
    return false;
  };
  size_t best = 0;
  for (size_t r = 1; r < n; ++r)
    if (rot_less(r, best)) best = r;
  std::vector<Syllable> out(n);
  for (size_t k = 0; k < n; ++k) out[k] = w.syl[(best + k) % n];
  return out;
}

inline bool same_cyclic_word(const TightWord& a, const TightWord& b) {
  if (a.syl.size() != b.syl.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

// ---------------------------------------------------------------------------
// Arc invariants.  Arc i of a word is the a-block p_i; it is followed by the
// t-letter e_i.  Partial sums S_k = e_i + ... + e_{i+k-1} (k = 0..n) give
// mu_i = max_k S_k and lambda_i = -min_k S_k.

struct WordArc {
  Int winding;     // p_i
  int eps_out = 0; // t-letter following the arc (e_i)
  int eps_in = 0;  // t-letter preceding the arc (e_{i-1})
  int mu = 0;
  int lambda = 0;
};

inline std::vector<WordArc> word_arcs(const TightWord& w) {
  size_t n = w.syl.size();
  std::vector<WordArc> arcs(n);
  for (size_t i = 0; i < n; ++i) {
    WordArc& a = arcs[i];
    a.winding = w.syl[i].p;
    a.eps_out = w.syl[i].eps;
    a.eps_in = w.syl[(i + n - 1) % n].eps;
    long long s = 0, mx = 0, mn = 0;
    for (size_t k = 0; k < n; ++k) {
      s += w.syl[(i + k) % n].eps;
      mx = std::max(mx, s);
      mn = std::min(mn, s);
    }
    a.mu = static_cast<int>(mx);
    a.lambda = static_cast<int>(-mn);
  }
  return arcs;
}

struct WordComplexity {
  int arc_count = 0;
  int rho = 0;  // min(max_i mu_i, max_i lambda_i)
  Int h = 0;
};

inline WordComplexity word_complexity(const TightWord& w) {
  WordComplexity c;
  c.arc_count = static_cast<int>(w.syl.size());
  c.h = h_value(w);
  int mu = 0, la = 0;
  for (auto& a : word_arcs(w)) {
    mu = std::max(mu, a.mu);
    la = std::max(la, a.lambda);
  }
  c.rho = std::min(mu, la);
  return c;
}

// s(g) = sum_j p_j (m/l)^{k_j} where k_j is the t-exponent level at which the
// j-th a-block sits; defined for h(g) = 0 (conjugation-invariant then).
inline Rat s_value(const TightWord& w, const GroupParams& G) {
  if (h_value(w) != 0) throw Error(ErrKind::Unsupported, "s-value needs h = 0");
  Rat ml = Rat(Int(G.m), Int(G.l));
  Rat sum = 0;
  long long level = 0;
  for (auto& s : w.syl) {
    sum += Rat(s.p) * rat_pow(ml, level);
    level += s.eps;
  }
  return sum;
}

// Alternating-sign exponent sum, meaningful for M = -L and h(g) even; only its
// vanishing is rotation-invariant (a rotation may flip the global sign).
inline Int s_alt_value(const TightWord& w) {
  Int sum = 0;
  int sign = 1;
  for (auto& s : w.syl) {
    sum += sign * s.p;
    sign = -sign;
  }
  return sum;
}

inline bool is_t_alternating(const TightWord& w) {
  size_t n = w.syl.size();
  if (n < 2 || n % 2 != 0) return false;
  for (size_t i = 0; i < n; ++i)
    if (w.syl[i].eps == w.syl[(i + 1) % n].eps) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Chains: formal sums  r_1 g_1 + ... + r_k g_k  with positive rational
// coefficients and tight hyperbolic words.

struct ChainTerm {
  Rat r;
  TightWord word;
  bool reduced_from_input = false;  // a pinch fired while tightening the input
};

struct Chain {
  std::vector<ChainTerm> terms;
  std::vector<std::string> dropped_elliptic;  // reduced forms, e.g. "a^5"
};

namespace detail {

inline std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '+') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// Leading optional rational coefficient; whitespace after it is optional since
// words always start with a letter.
inline Rat take_coefficient(std::string& term) {
  size_t i = 0;
  while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
  size_t start = i;
  std::string digits;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) digits.push_back(term[i++]);
  if (digits.empty()) {
    term = term.substr(start);
    return Rat(1);
  }
  std::string denom;
  size_t save = i;
  while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
  if (i < term.size() && term[i] == '/') {
    ++i;
    while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) denom.push_back(term[i++]);
    if (denom.empty()) throw Error(ErrKind::Parse, "missing denominator in coefficient");
  } else {
    i = save;
  }
  term = term.substr(i);
  if (!denom.empty() && Int(denom) == 0)
    throw Error(ErrKind::Parse, "zero denominator in coefficient");
  Rat r = denom.empty() ? Rat(Int(digits)) : Rat(Int(digits), Int(denom));
  return r;
}

}  // namespace detail

inline Chain parse_chain(const std::string& text, const GroupParams& G) {
  Chain chain;
  for (std::string part : detail::split_terms(text)) {
    Rat coef = detail::take_coefficient(part);
    bool empty = true;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c))) empty = false;
    if (empty) throw Error(ErrKind::Parse, "empty word in chain term");
    if (coef <= 0) throw Error(ErrKind::Parse, "chain coefficients must be positive");
    auto red = parse_word(part, G);
    if (red.elliptic) {
      std::string desc = red.elliptic_power == 0     ? "a^0"
                         : red.elliptic_power == 1   ? "a"
                         : red.elliptic_power == -1  ? "A"
                                                     : "a^" + red.elliptic_power.str();
      chain.dropped_elliptic.push_back(desc);
      continue;
    }
    bool merged = false;
    for (auto& t : chain.terms) {
      if (same_cyclic_word(t.word, red.word)) {
        t.r += coef;
        t.reduced_from_input = t.reduced_from_input || red.pinches > 0;
        merged = true;
        break;
      }
    }
    if (!merged) chain.terms.push_back({coef, red.word, red.pinches > 0});
  }
  return chain;
}

inline std::string chain_str(const Chain& c) {
  std::string out;
  for (size_t i = 0; i < c.terms.size(); ++i) {
    if (i) out += " + ";
    if (c.terms[i].r != 1) out += rat_str(c.terms[i].r) + " ";
    out += word_str(c.terms[i].word);
  }
  return out;
}

// t-homology class of the chain; scl is finite iff this vanishes.
struct HomologyCheck {
  bool ok = false;
  Rat t_class;       // sum r_i h(g_i)
  std::string note;  // extra caveat for M = L
};

inline HomologyCheck homology_check(const Chain& c, const GroupParams& G) {
  HomologyCheck hc;
  hc.t_class = 0;
  for (auto& t : c.terms) hc.t_class += t.r * Rat(h_value(t.word));
  hc.ok = hc.t_class == 0;
  if (G.M == G.L && hc.ok) {
    Rat a_total = 0;
    for (auto& t : c.terms)
      for (auto& s : t.word.syl) a_total += t.r * Rat(s.p);
    if (a_total != 0)
      hc.note = "total a-exponent is nonzero; for M = L the value computed here is scl relative to <a>";
  }
  return hc;
}

}  // namespace bsscl
