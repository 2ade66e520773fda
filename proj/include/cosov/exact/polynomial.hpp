#pragma once

#include "cosov/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cosov {

/// Dense univariate polynomial over a field. Coefficients are stored from the
/// constant term upwards with no trailing zeros, so the zero polynomial has an
/// empty coefficient vector and degree -1.
template <class Coef>
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Coef c) {  // NOLINT(google-explicit-constructor)
    if (c != Coef(0)) coefs_.push_back(std::move(c));
  }
  Polynomial(int c) : Polynomial(Coef(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Coef> coefs) : coefs_(std::move(coefs)) { trim(); }

  /// c * x^k
  static Polynomial monomial(Coef c, std::size_t k) {
    if (c == Coef(0)) return {};
    std::vector<Coef> v(k + 1, Coef(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Coef(1), 1); }

  int degree() const { return static_cast<int>(coefs_.size()) - 1; }
  bool is_zero() const { return coefs_.empty(); }
  bool is_constant() const { return coefs_.size() <= 1; }
  bool is_one() const { return coefs_.size() == 1 && coefs_[0] == Coef(1); }
  const std::vector<Coef>& coefficients() const { return coefs_; }

  Coef coefficient(std::size_t k) const { return k < coefs_.size() ? coefs_[k] : Coef(0); }
  Coef leading() const { return coefs_.empty() ? Coef(0) : coefs_.back(); }

  /// True for c * x^k with c != 0.
  bool is_monomial() const {
    if (coefs_.empty()) return false;
    for (std::size_t i = 0; i + 1 < coefs_.size(); ++i)
      if (coefs_[i] != Coef(0)) return false;
    return true;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  Coef evaluate(const Coef& at) const {
    Coef acc(0);
    for (auto it = coefs_.rbegin(); it != coefs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coefs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coefs_.size() > coefs_.size()) coefs_.resize(o.coefs_.size(), Coef(0));
    for (std::size_t i = 0; i < o.coefs_.size(); ++i) coefs_[i] += o.coefs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coefs_.size() > coefs_.size()) coefs_.resize(o.coefs_.size(), Coef(0));
    for (std::size_t i = 0; i < o.coefs_.size(); ++i) coefs_[i] -= o.coefs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coef> v(a.coefs_.size() + b.coefs_.size() - 1, Coef(0));
    for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
      if (a.coefs_[i] == Coef(0)) continue;
      for (std::size_t j = 0; j < b.coefs_.size(); ++j) v[i + j] += a.coefs_[i] * b.coefs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(Polynomial a, const Coef& c) {
    if (c == Coef(0)) return {};
    for (auto& x : a.coefs_) x *= c;
    return a;
  }
  friend Polynomial operator/(Polynomial a, const Coef& c) {
    if (c == Coef(0)) throw DomainError("polynomial division by zero scalar");
    for (auto& x : a.coefs_) x /= c;
    return a;
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Coef> rem = a.coefs_;
    std::vector<Coef> quo(a.coefs_.size() - b.coefs_.size() + 1, Coef(0));
    const Coef lead = b.leading();
    const std::size_t db = b.coefs_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      Coef c = rem[k + db] / lead;
      if (c == Coef(0)) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coefs_[j];
      quo[k] = std::move(c);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coefs_ == b.coefs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Renders highest degree first, e.g. "x^2 - 3*x + 1/2".
  template <class CoefFormatter>
  std::string to_string(const std::string& var, CoefFormatter&& fmt) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coefs_.size(); k-- > 0;) {
      const Coef& c = coefs_[k];
      if (c == Coef(0)) continue;
      const bool neg = c < Coef(0);
      const Coef mag = neg ? Coef(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (k == 0) {
        out += fmt(mag);
        continue;
      }
      if (mag != Coef(1)) out += fmt(mag) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

private:
  void trim() {
    while (!coefs_.empty() && coefs_.back() == Coef(0)) coefs_.pop_back();
  }

  std::vector<Coef> coefs_;
};

}  // namespace cosov
