#pragma once

#include "cosov/errors.hpp"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cosov::diamond {

/// Index of a generator; generators are totally ordered by index.
using Generator = std::uint32_t;

/// Names may contain letters, digits and the characters _ * ' ^ and must start
/// with a letter, so that they never collide with coefficients in rule text.
inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '*' || c == '\'' || c == '^';
}

/// Ordered list of named generators; the position in the list is the order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty() || !is_name_start(n[0]))
        throw DomainError("invalid generator name '" + n + "' (must start with a letter)");
      for (char c : n)
        if (!is_name_char(c)) throw DomainError("invalid character in generator name '" + n + "'");
      if (!index_.emplace(n, static_cast<Generator>(i)).second)
        throw DomainError("duplicate generator name '" + n + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Generator g) const { return names_.at(g); }

  std::optional<Generator> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Generator at(std::string_view name) const {
    auto g = find(name);
    if (!g) throw DomainError("unknown generator '" + std::string(name) + "'");
    return *g;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Generator> index_;
};

}  // namespace cosov::diamond
