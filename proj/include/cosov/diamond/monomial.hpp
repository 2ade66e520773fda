#pragma once

#include "cosov/diamond/alphabet.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cosov::diamond {

/// Word in the generators, compared degree-lexicographically: length first,
/// then lexicographically by generator order.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::initializer_list<Generator> g) : letters_(g) {}
  explicit Monomial(std::vector<Generator> g) : letters_(std::move(g)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Generator>& letters() const { return letters_; }

  Monomial slice(std::size_t from, std::size_t len) const {
    return Monomial(std::vector<Generator>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                           letters_.begin() + static_cast<std::ptrdiff_t>(from + len)));
  }
  Monomial prefix(std::size_t len) const { return slice(0, len); }
  Monomial suffix(std::size_t len) const { return slice(size() - len, len); }

  /// True if `f` occurs as a factor starting at position `pos`.
  bool matches_at(const Monomial& f, std::size_t pos) const {
    if (pos + f.size() > size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (letters_[pos + i] != f.letters_[i]) return false;
    return true;
  }
  bool contains(const Monomial& f) const {
    if (f.size() > size()) return false;
    for (std::size_t p = 0; p + f.size() <= size(); ++p)
      if (matches_at(f, p)) return true;
    return false;
  }

  void push_back(Generator g) { letters_.push_back(g); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  /// Generator names joined by '.', or "1" for the empty monomial.
  std::string to_string(const Alphabet& alphabet) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += '.';
      out += alphabet.name(letters_[i]);
    }
    return out;
  }

private:
  std::vector<Generator> letters_;
};

}  // namespace cosov::diamond
