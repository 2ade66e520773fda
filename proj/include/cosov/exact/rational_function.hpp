#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/polynomial.hpp"
#include "cosov/exact/rational.hpp"

#include <string>
#include <utility>

namespace cosov {

using RationalPolynomial = Polynomial<Rational>;

/// Element of the rational function field Q(q).
///
/// Invariant: numerator and denominator are coprime, the denominator is monic,
/// and zero is stored as 0/1. Two equal functions therefore have identical
/// representations, so equality is structural.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(Rational(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(RationalPolynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(1) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  /// The indeterminate q.
  static RationalFunction q() { return RationalFunction(RationalPolynomial::x()); }

  const RationalPolynomial& numerator() const { return num_; }
  const RationalPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Value of a constant function; throws if q actually occurs.
  Rational constant_value() const {
    if (!is_constant()) throw DomainError("rational function " + to_string() + " is not a constant");
    return num_.coefficient(0);
  }

  /// Value at q = at. Throws when the denominator vanishes there.
  Rational evaluate(const Rational& at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw DomainError("rational function has a pole at q = " + cosov::to_string(at));
    return num_.evaluate(at) / d;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(q)");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction acc(1), base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_one()) normalize();
      else if (num_.is_zero()) den_ = RationalPolynomial(1);
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    if (den_.is_one() && o.den_.is_one()) {
      num_ = num_ * o.num_;
      return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Renders Laurent polynomials as sums of c*q^k ("q + q^-1"), anything else
  /// as "(num)/(den)". With compact = true no spaces are emitted, which is the
  /// form used inside whitespace-separated matrix files.
  std::string to_string(bool compact = false) const {
    auto fmt = [](const Rational& r) { return cosov::to_string(r); };
    std::string s;
    if (den_.is_one()) {
      s = laurent_string(num_, 0);
    } else if (den_.is_monomial()) {
      s = laurent_string(num_, den_.degree());
    } else {
      s = "(" + num_.to_string("q", fmt) + ")/(" + den_.to_string("q", fmt) + ")";
    }
    if (compact) std::erase(s, ' ');
    return s;
  }

private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("zero denominator in Q(q)");
    if (num_.is_zero()) {
      den_ = RationalPolynomial(1);
      return;
    }
    if (!den_.is_constant()) {
      RationalPolynomial g = RationalPolynomial::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  // num * q^-shift, highest exponent first.
  static std::string laurent_string(const RationalPolynomial& num, int shift) {
    if (num.is_zero()) return "0";
    std::string out;
    const auto& c = num.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k] == 0) continue;
      const int e = static_cast<int>(k) - shift;
      const bool neg = c[k] < 0;
      const Rational mag = neg ? Rational(-c[k]) : c[k];
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (e == 0) {
        out += cosov::to_string(mag);
        continue;
      }
      if (mag != 1) out += cosov::to_string(mag) + "*";
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  RationalPolynomial num_;
  RationalPolynomial den_;
};

inline std::string to_string(const RationalFunction& f) { return f.to_string(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace cosov
