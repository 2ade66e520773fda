#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cosov::freeprod {

/// A nontrivial simple comodule of one free factor: Z^i (i != 0) from the
/// Laurent polynomial factor, or V_j (j >= 1) from the quantum SL(2) factor.
class AltFactor {
public:
  enum class Kind : std::uint8_t { Z, V };

  static AltFactor z(std::int64_t exponent) {
    if (exponent == 0) throw DomainError("Z^0 is the trivial comodule and is not a factor");
    return AltFactor(Kind::Z, exponent);
  }
  static AltFactor v(std::int64_t spin) {
    if (spin < 1) throw DomainError("V_j needs j >= 1 (V_0 is the trivial comodule)");
    return AltFactor(Kind::V, spin);
  }

  Kind kind() const { return kind_; }
  bool is_z() const { return kind_ == Kind::Z; }
  bool is_v() const { return kind_ == Kind::V; }
  std::int64_t index() const { return index_; }

  std::string to_string() const {
    return (kind_ == Kind::Z ? "Z^" : "V_") + std::to_string(index_);
  }

  friend bool operator==(const AltFactor&, const AltFactor&) = default;
  friend auto operator<=>(const AltFactor&, const AltFactor&) = default;  // Z before V, then index

private:
  AltFactor(Kind k, std::int64_t i) : kind_(k), index_(i) {}

  Kind kind_;
  std::int64_t index_;
};

/// Simple alternated comodule: a strictly alternating sequence of Z- and
/// V-factors. The empty word is the trivial comodule.
class AltWord {
public:
  AltWord() = default;
  explicit AltWord(std::vector<AltFactor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 1; i < factors_.size(); ++i)
      if (factors_[i].kind() == factors_[i - 1].kind())
        throw DomainError("alternated word has two adjacent factors of the same kind");
  }

  const std::vector<AltFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const AltFactor& front() const { return factors_.front(); }
  const AltFactor& back() const { return factors_.back(); }

  /// "Z^1 V_2 Z^-1"; the trivial word renders as "1".
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += ' ';
      out += f.to_string();
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : factors_) j.push_back({{"kind", f.is_z() ? "Z" : "V"}, {"index", f.index()}});
    return j;
  }

  friend bool operator==(const AltWord&, const AltWord&) = default;
  /// Factor count first, then lexicographic on factors.
  friend std::strong_ordering operator<=>(const AltWord& a, const AltWord& b) {
    if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
      if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

private:
  std::vector<AltFactor> factors_;
};

/// Integer combination of alternated words: an element of the representation
/// ring of the free product.
class RepElement {
public:
  using Terms = std::map<AltWord, std::int64_t>;

  RepElement() = default;
  RepElement(const AltWord& w) { terms_[w] = 1; }  // NOLINT(google-explicit-constructor)

  static RepElement trivial() { return RepElement(AltWord()); }

  void add(const AltWord& w, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted && (it->second += mult) == 0) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// A single alternated word with coefficient 1, i.e. the character of a simple comodule.
  bool is_simple() const { return terms_.size() == 1 && terms_.begin()->second == 1; }
  const AltWord& single() const {
    if (!is_simple()) throw DomainError("representation-ring element is not a single simple comodule");
    return terms_.begin()->first;
  }

  RepElement& operator+=(const RepElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  RepElement& operator-=(const RepElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
  friend bool operator==(const RepElement&, const RepElement&) = default;

  /// Largest alternated words first, as for fusion-ring elements: "V_2 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [w, m] = *it;
      if (out.empty()) {
        if (m < 0) out += "-";
      } else {
        out += m < 0 ? " - " : " + ";
      }
      std::int64_t mag = m < 0 ? -m : m;
      if (mag != 1) out += std::to_string(mag) + " ";
      out += w.size() > 1 && mag != 1 ? "[" + w.to_string() + "]" : w.to_string();
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, m] : terms_) j.push_back({{"word", w.to_json()}, {"multiplicity", m}});
    return j;
  }

private:
  Terms terms_;
};

/// V_i (x) V_j = V_|i-j| + V_|i-j|+2 + ... + V_i+j for generic q.
inline std::vector<std::int64_t> clebsch_gordan(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw DomainError("Clebsch-Gordan indices must be nonnegative");
  std::vector<std::int64_t> out;
  for (std::int64_t k = i > j ? i - j : j - i; k <= i + j; k += 2) out.push_back(k);
  return out;
}

namespace detail {

inline void emit(std::vector<AltFactor> left, const std::vector<AltFactor>& right, std::size_t right_from,
                 std::int64_t mult, RepElement& out) {
  left.insert(left.end(), right.begin() + static_cast<std::ptrdiff_t>(right_from), right.end());
  out.add(AltWord(std::move(left)), mult);
}

// Product of left[0..left_end) with right[right_from..), resolving the
// junction. Each collapse removes at least one factor, so this terminates.
inline void resolve_junction(const std::vector<AltFactor>& left, std::size_t left_end,
                             const std::vector<AltFactor>& right, std::size_t right_from, std::int64_t mult,
                             RepElement& out) {
  auto head = [&](std::size_t n) {
    return std::vector<AltFactor>(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(n));
  };
  if (left_end == 0 || right_from == right.size()) {
    emit(head(left_end), right, right_from, mult, out);
    return;
  }
  const AltFactor& l = left[left_end - 1];
  const AltFactor& r = right[right_from];
  if (l.kind() != r.kind()) {
    emit(head(left_end), right, right_from, mult, out);
    return;
  }
  if (l.is_z()) {
    const std::int64_t e = l.index() + r.index();
    if (e == 0) {
      resolve_junction(left, left_end - 1, right, right_from + 1, mult, out);
    } else {
      auto merged = head(left_end - 1);
      merged.push_back(AltFactor::z(e));
      emit(std::move(merged), right, right_from + 1, mult, out);
    }
    return;
  }
  for (std::int64_t k : clebsch_gordan(l.index(), r.index())) {
    if (k == 0) {
      resolve_junction(left, left_end - 1, right, right_from + 1, mult, out);
    } else {
      auto merged = head(left_end - 1);
      merged.push_back(AltFactor::v(k));
      emit(std::move(merged), right, right_from + 1, mult, out);
    }
  }
}

}  // namespace detail

/// Tensor product of simple alternated comodules, decomposed into simples.
inline RepElement multiply(const AltWord& u, const AltWord& v) {
  RepElement out;
  detail::resolve_junction(u.factors(), u.size(), v.factors(), 0, 1, out);
  return out;
}

inline RepElement multiply(const RepElement& u, const RepElement& v) {
  RepElement out;
  for (const auto& [a, m] : u.terms())
    for (const auto& [b, n] : v.terms()) detail::resolve_junction(a.factors(), a.size(), b.factors(), 0, m * n, out);
  return out;
}

inline RepElement operator*(const RepElement& u, const RepElement& v) { return multiply(u, v); }

/// dim V_j = j + 1, dim Z^i = 1.
inline Integer alt_dim(const AltWord& w) {
  Integer d = 1;
  for (const auto& f : w.factors())
    if (f.is_v()) d *= Integer(f.index() + 1);
  return d;
}

inline Integer alt_dim(const RepElement& u) {
  Integer d = 0;
  for (const auto& [w, m] : u.terms()) d += Integer(m) * alt_dim(w);
  return d;
}

/// Fusion rules of the SO(3)-type category: W_k (x) W_l = W_|k-l| + ... + W_k+l,
/// the even part of V_2k (x) V_2l with spins halved.
inline std::vector<std::int64_t> so3_fuse(std::int64_t k, std::int64_t l) {
  if (k < 0 || l < 0) throw DomainError("SO(3) fusion indices must be nonnegative");
  std::vector<std::int64_t> out;
  for (std::int64_t s : clebsch_gordan(2 * k, 2 * l))
    if (s % 2 == 0) out.push_back(s / 2);
  return out;
}

}  // namespace cosov::freeprod
