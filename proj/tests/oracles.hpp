#pragma once
// Reference computations used to cross-check the library. Each one takes a
// different route from the production code: the fusion ring is modelled as
// the free algebra Z<a, b> with the simple classes written in the monomial
// basis; SL(2) tensor products go through Laurent-polynomial characters;
// similarity is checked against characteristic polynomials.

#include "cosov/exact/matrix.hpp"
#include "cosov/exact/polynomial.hpp"
#include "cosov/exact/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- fusion ring

using WordPoly = std::map<std::string, std::int64_t>;  // word over {a, b} -> coefficient

inline char flip(char c) { return c == 'a' ? 'b' : 'a'; }

inline std::string bar(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) c = flip(c);
  return r;
}

inline void add(WordPoly& p, const std::string& w, std::int64_t c) {
  if ((p[w] += c) == 0) p.erase(w);
}

inline WordPoly times(const WordPoly& p, const WordPoly& q) {
  WordPoly r;
  for (const auto& [u, c] : p)
    for (const auto& [v, d] : q) add(r, u + v, c * d);
  return r;
}

// Class of U_w in Z<a, b>, from U_{xc} = U_x c - [x ends with bar(c)] U_{x minus last letter}.
inline const WordPoly& simple_class(const std::string& w) {
  static std::map<std::string, WordPoly> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  WordPoly r;
  if (w.empty()) {
    r[""] = 1;
  } else {
    const std::string x = w.substr(0, w.size() - 1);
    const char c = w.back();
    r = times(simple_class(x), WordPoly{{std::string(1, c), 1}});
    if (!x.empty() && x.back() == flip(c))
      for (const auto& [u, k] : simple_class(x.substr(0, x.size() - 1))) add(r, u, -k);
  }
  return memo.emplace(w, std::move(r)).first->second;
}

// Expands p in the basis {U_w}: U_w = w + shorter words, so peel longest first.
inline WordPoly decompose(WordPoly p) {
  WordPoly out;
  while (!p.empty()) {
    auto top = std::max_element(p.begin(), p.end(), [](const auto& l, const auto& r) {
      return l.first.size() != r.first.size() ? l.first.size() < r.first.size() : l.first < r.first;
    });
    const std::string w = top->first;
    const std::int64_t c = top->second;
    add(out, w, c);
    for (const auto& [u, k] : simple_class(w)) add(p, u, -c * k);
  }
  return out;
}

// U_x (x) U_y in the basis of simple classes, keyed by word ("" is the unit).
inline WordPoly fuse(const std::string& x, const std::string& y) {
  return decompose(times(simple_class(x), simple_class(y)));
}

// dim U_x with both fundamental comodules of dimension n.
inline cosov::Integer dim(const std::string& x, std::int64_t n) {
  cosov::Integer total = 0;
  for (const auto& [u, c] : simple_class(x)) {
    cosov::Integer t = c;
    for (std::size_t k = 0; k < u.size(); ++k) t *= n;
    total += t;
  }
  return total;
}

// ------------------------------------------------------------ SL(2) characters

using Laurent = std::map<std::int64_t, std::int64_t>;  // exponent -> coefficient

inline Laurent sl2_character(std::int64_t spin) {
  Laurent c;
  for (std::int64_t k = -spin; k <= spin; k += 2) c[k] = 1;
  return c;
}

// Spins in V_i (x) V_j, read off by peeling the highest weight.
inline std::vector<std::int64_t> clebsch_gordan(std::int64_t i, std::int64_t j) {
  Laurent p;
  for (const auto& [e, c] : sl2_character(i))
    for (const auto& [f, d] : sl2_character(j)) p[e + f] += c * d;
  std::vector<std::int64_t> out;
  for (;;) {
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    if (p.empty()) break;
    const auto [top, mult] = *p.rbegin();
    for (std::int64_t m = 0; m < mult; ++m) out.push_back(top);
    for (const auto& [e, c] : sl2_character(top)) p[e] -= mult * c;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- matrices

using cosov::Rational;
using RMatrix = cosov::Matrix<Rational>;

// Faddeev-LeVerrier: coefficients of det(xI - A), constant term first.
inline std::vector<Rational> char_poly(const RMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    c[n - k] = -cosov::trace(a * m) / Rational(static_cast<long>(k));
  }
  return c;
}

inline bool is_identity(const RMatrix& m) { return m == RMatrix::identity(m.rows()); }

// Unimodular integer matrix: product of random unit upper and lower triangular factors.
inline RMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  RMatrix up = RMatrix::identity(n), lo = RMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      up(i, j) = d(rng);
      lo(j, i) = d(rng);
    }
  return up * lo;
}

// tr(A^-1) for a 2x2 matrix via tr(A) / det(A).
inline Rational inverse_trace_2x2(const RMatrix& a) {
  return (a(0, 0) + a(1, 1)) / (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
}

// --------------------------------------------------------------- string rules

// All words over `letters` of length <= max_len that contain none of `patterns`.
inline std::vector<std::vector<int>> avoiding_words(int letters, std::size_t max_len,
                                                    const std::vector<std::vector<int>>& patterns) {
  std::vector<std::vector<int>> out, level{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level) {
      bool bad = false;
      for (const auto& p : patterns)
        if (std::search(w.begin(), w.end(), p.begin(), p.end()) != w.end() && !p.empty()) bad = true;
      if (!bad) out.push_back(w);
      if (len < max_len)
        for (int g = 0; g < letters; ++g) {
          auto e = w;
          e.push_back(g);
          next.push_back(std::move(e));
        }
    }
    level = std::move(next);
  }
  return out;
}

// Overlap witnesses of H(E, F) for m x m E and n x n F, written from the index
// ranges of the four families: u_in v_1n u_1j, v_i1 u_m1 v_mj (i <= m, j <= n)
// and v_1i u_1n v_jn, u_mi v_m1 u_j1 (i <= n, j <= m).
inline std::set<std::string> hef_overlap_witnesses(std::size_t m, std::size_t n) {
  auto g = [](char c, std::size_t i, std::size_t j) { return c + std::to_string(i) + std::to_string(j); };
  auto w = [](const std::string& x, const std::string& y, const std::string& z) { return x + "." + y + "." + z; };
  std::set<std::string> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      out.insert(w(g('u', i, n), g('v', 1, n), g('u', 1, j)));
      out.insert(w(g('v', i, 1), g('u', m, 1), g('v', m, j)));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      out.insert(w(g('v', 1, i), g('u', 1, n), g('v', j, n)));
      out.insert(w(g('u', m, i), g('v', m, 1), g('u', j, 1)));
    }
  return out;
}

}  // namespace oracle
