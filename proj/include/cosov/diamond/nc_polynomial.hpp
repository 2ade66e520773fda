#pragma once

#include "cosov/diamond/alphabet.hpp"
#include "cosov/diamond/monomial.hpp"
#include "cosov/exact/rational.hpp"
#include "cosov/exact/rational_function.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace cosov::diamond {

namespace detail {

// Coefficient rendering for rule text: constants print bare, genuine rational
// functions print in parentheses so that they parse back unambiguously.
inline bool coef_is_constant(const Rational&) { return true; }
inline Rational coef_constant(const Rational& r) { return r; }
inline std::string coef_text(const Rational& r) { return cosov::to_string(r); }

inline bool coef_is_constant(const RationalFunction& f) { return f.is_constant(); }
inline Rational coef_constant(const RationalFunction& f) { return f.constant_value(); }
inline std::string coef_text(const RationalFunction& f) {
  std::string s = f.to_string();
  return s.front() == '(' ? s : "(" + s + ")";
}

}  // namespace detail

/// Noncommutative polynomial: finite map from monomials to nonzero
/// coefficients, iterated from the largest monomial down.
template <class Field>
class NCPolynomial {
public:
  using Terms = std::map<Monomial, Field, std::greater<>>;

  NCPolynomial() = default;
  NCPolynomial(const Monomial& m, Field c = Field(1)) { add_term(m, std::move(c)); }  // NOLINT
  static NCPolynomial constant(Field c) { return NCPolynomial(Monomial(), std::move(c)); }

  void add_term(const Monomial& m, const Field& c) {
    if (c == Field(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Field(0)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  Terms& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  Field coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Field(0) : it->second;
  }

  NCPolynomial operator-() const {
    NCPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const Field& s, const NCPolynomial& p) {
    NCPolynomial r;
    if (s == Field(0)) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
    return r;
  }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r;
    for (const auto& [m, c] : a.terms_)
      for (const auto& [n, d] : b.terms_) r.add_term(m * n, c * d);
    return r;
  }
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Rule-file syntax: "1 - u11.v11 + 3/2*v12.u21", "(q^2)*b.a", "0".
  std::string to_string(const Alphabet& alphabet) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      bool neg = false;
      std::string coef;
      if (detail::coef_is_constant(c)) {
        Rational v = detail::coef_constant(c);
        neg = v < 0;
        if (neg) v = -v;
        if (v != 1 || m.empty()) coef = cosov::to_string(v);
      } else {
        coef = detail::coef_text(c);
      }
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (m.empty()) {
        out += coef;
      } else {
        if (!coef.empty()) out += coef + "*";
        out += m.to_string(alphabet);
      }
    }
    return out;
  }

private:
  Terms terms_;
};

}  // namespace cosov::diamond
