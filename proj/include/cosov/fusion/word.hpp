#pragma once

#include "cosov/errors.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cosov::fusion {

/// Element of the free monoid on the two letters alpha and beta. Letters are
/// spelled 'a' (alpha) and 'b' (beta); the unit is spelled "e".
class Word {
public:
  Word() = default;

  /// Parses "e" or a nonempty string over {a, b}. Errors report the 1-based
  /// column of the offending character.
  static Word parse(std::string_view s) {
    if (s == "e") return {};
    if (s.empty()) throw ParseError("empty word (spell the unit as 'e')", 0, 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != 'a' && s[i] != 'b')
        throw ParseError(std::string("invalid letter '") + s[i] + "' in word (expected 'a' or 'b')", 0, i + 1);
    Word w;
    w.letters_ = std::string(s);
    return w;
  }

  static Word alpha() { return from_letters("a"); }
  static Word beta() { return from_letters("b"); }

  /// (alpha beta)^n, (beta alpha)^n and friends are built from this.
  static Word repeat(std::string_view block, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += block;
    return from_letters(s);
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  char front() const { return letters_.front(); }
  char back() const { return letters_.back(); }
  const std::string& letters() const { return letters_; }

  Word prefix(std::size_t n) const { return from_letters(letters_.substr(0, n)); }
  Word suffix(std::size_t n) const { return from_letters(letters_.substr(letters_.size() - n)); }
  Word drop_front(std::size_t n = 1) const { return from_letters(letters_.substr(n)); }
  bool starts_with(const Word& p) const { return letters_.starts_with(p.letters_); }
  bool ends_with(const Word& s) const { return letters_.ends_with(s.letters_); }

  /// Antimultiplicative involution: reverse and swap a <-> b.
  Word bar() const {
    Word w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (char& c : w.letters_) c = c == 'a' ? 'b' : 'a';
    return w;
  }

  std::string to_string() const { return letters_.empty() ? "e" : letters_; }

  friend Word operator*(const Word& x, const Word& y) { return from_letters(x.letters_ + y.letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  /// Canonical order: length first, then lexicographic with a < b.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
    return x.letters_.compare(y.letters_) <=> 0;
  }

private:
  static Word from_letters(std::string s) {
    Word w;
    w.letters_ = std::move(s);
    return w;
  }

  std::string letters_;
};

inline Word bar(const Word& x) { return x.bar(); }

/// Every word of length <= max_len, in canonical order (2^(max_len+1) - 1 words).
inline std::vector<Word> all_words(std::size_t max_len) {
  if (max_len > 24) throw BoundError("word enumeration bound too large");
  std::vector<Word> out;
  out.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s(len, 'a');
      for (std::size_t i = 0; i < len; ++i)
        if (bits & (std::size_t{1} << (len - 1 - i))) s[i] = 'b';
      out.push_back(Word::parse(s));
    }
  return out;
}

}  // namespace cosov::fusion

template <>
struct std::hash<cosov::fusion::Word> {
  std::size_t operator()(const cosov::fusion::Word& w) const noexcept { return std::hash<std::string>{}(w.letters()); }
};
