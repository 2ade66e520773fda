#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/rational.hpp"
#include "cosov/fusion/word.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cosov::fusion {

/// Integer linear combination of words: an element of the fusion ring, or the
/// character of a (virtual) comodule. Zero multiplicities are never stored.
class FusionElement {
public:
  using Terms = std::map<Word, std::int64_t>;

  FusionElement() = default;
  FusionElement(const Word& w) { terms_[w] = 1; }  // NOLINT(google-explicit-constructor)

  void add(const Word& w, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted && (it->second += mult) == 0) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t multiplicity(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  FusionElement& operator+=(const FusionElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, m);
    return *this;
  }
  FusionElement& operator-=(const FusionElement& o) {
    for (const auto& [w, m] : o.terms_) add(w, -m);
    return *this;
  }
  friend FusionElement operator+(FusionElement a, const FusionElement& b) { return a += b; }
  friend FusionElement operator-(FusionElement a, const FusionElement& b) { return a -= b; }
  friend FusionElement operator*(std::int64_t c, const FusionElement& a) {
    FusionElement r;
    for (const auto& [w, m] : a.terms_) r.add(w, c * m);
    return r;
  }
  friend bool operator==(const FusionElement&, const FusionElement&) = default;

  /// Terms joined by " + " (or " - "), longest words first: "ab + e".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [w, m] = *it;
      if (out.empty()) {
        if (m < 0) out += "-";
      } else {
        out += m < 0 ? " - " : " + ";
      }
      std::int64_t mag = m < 0 ? -m : m;
      if (mag != 1) out += std::to_string(mag) + " ";
      out += w.to_string();
    }
    return out;
  }

  /// [[word, multiplicity], ...] in canonical (ascending) word order.
  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, m] : terms_) j.push_back({w.to_string(), m});
    return j;
  }

  static FusionElement from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("fusion element must be a JSON array of [word, multiplicity] pairs", 0, 0);
    FusionElement r;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number_integer())
        throw ParseError("fusion element term must be [word, integer]", 0, 0);
      r.add(Word::parse(t[0].get<std::string>()), t[1].get<std::int64_t>());
    }
    return r;
  }

private:
  Terms terms_;
};

/// x (.) y = sum over x = a g, y = bar(g) b of the word a b.
inline FusionElement odot(const Word& x, const Word& y) {
  FusionElement r;
  const std::size_t limit = std::min(x.size(), y.size());
  for (std::size_t k = 0; k <= limit; ++k) {
    const Word g = x.suffix(k);
    if (!y.starts_with(g.bar())) continue;
    r.add(x.prefix(x.size() - k) * y.drop_front(k), 1);
  }
  return r;
}

/// Bilinear extension of odot.
inline FusionElement odot(const FusionElement& u, const FusionElement& v) {
  FusionElement r;
  for (const auto& [x, m] : u.terms())
    for (const auto& [y, n] : v.terms()) {
      const FusionElement p = odot(x, y);
      for (const auto& [w, k] : p.terms()) r.add(w, m * n * k);
    }
  return r;
}

/// Decomposition of U_x (x) U_y into simple comodules U_w; same value as odot.
inline FusionElement fuse(const Word& x, const Word& y) { return odot(x, y); }

/// Label of the dual comodule: U_x^* = U_{bar(x)}.
inline Word dual(const Word& x) { return x.bar(); }

/// Dimension of U_x for a fundamental comodule of dimension n: the value on x
/// of the ring morphism from the odot-ring to Z with alpha, beta -> n.
/// Peels letters off the left: alpha (.) y = alpha y + [y starts with beta] y'.
inline Integer dim(const Word& x, std::int64_t n) {
  if (n < 2) throw DomainError("dimension parameter n must be at least 2");
  const std::size_t len = x.size();
  // suffix_dim[i] = D(x[i..])
  std::vector<Integer> suffix_dim(len + 2, Integer(0));
  suffix_dim[len] = 1;
  for (std::size_t i = len; i-- > 0;) {
    Integer d = Integer(n) * suffix_dim[i + 1];
    if (i + 1 < len && x[i + 1] != x[i]) d -= suffix_dim[i + 2];
    suffix_dim[i] = std::move(d);
  }
  return suffix_dim[0];
}

inline Integer dim(const FusionElement& u, std::int64_t n) {
  Integer total = 0;
  for (const auto& [w, m] : u.terms()) total += Integer(m) * dim(w, n);
  return total;
}

constexpr std::size_t kMaxTableLength = 8;

struct FusionTableEntry {
  Word x;
  Word y;
  FusionElement product;
  friend bool operator==(const FusionTableEntry&, const FusionTableEntry&) = default;
};

/// All products x (.) y with |x|, |y| <= max_len, x-major in canonical order.
inline std::vector<FusionTableEntry> fusion_table(std::size_t max_len) {
  if (max_len > kMaxTableLength)
    throw BoundError("fusion table length bound " + std::to_string(max_len) + " exceeds the limit of " +
                     std::to_string(kMaxTableLength));
  const auto words = all_words(max_len);
  std::vector<FusionTableEntry> out;
  out.reserve(words.size() * words.size());
  for (const auto& x : words)
    for (const auto& y : words) out.push_back({x, y, odot(x, y)});
  return out;
}

inline std::string format_table_text(const std::vector<FusionTableEntry>& table) {
  std::string out;
  for (const auto& e : table) out += e.x.to_string() + " * " + e.y.to_string() + " = " + e.product.to_string() + "\n";
  return out;
}

inline nlohmann::json table_to_json(const std::vector<FusionTableEntry>& table) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : table)
    j.push_back({{"x", e.x.to_string()}, {"y", e.y.to_string()}, {"product", e.product.to_json()}});
  return j;
}

inline std::vector<FusionTableEntry> table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("fusion table must be a JSON array", 0, 0);
  std::vector<FusionTableEntry> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("product"))
      throw ParseError("fusion table entry needs x, y and product", 0, 0);
    out.push_back({Word::parse(e["x"].get<std::string>()), Word::parse(e["y"].get<std::string>()),
                   FusionElement::from_json(e["product"])});
  }
  return out;
}

}  // namespace cosov::fusion
