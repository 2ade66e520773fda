#pragma once

#include "cosov/diamond/alphabet.hpp"
#include "cosov/diamond/monomial.hpp"
#include "cosov/diamond/nc_polynomial.hpp"
#include "cosov/diamond/rewrite_system.hpp"
#include "cosov/errors.hpp"
#include "cosov/exact/rational_function.hpp"
#include "cosov/exact/scalar_parse.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cosov::diamond {

using QSystem = RewriteSystem<RationalFunction>;
using QPoly = NCPolynomial<RationalFunction>;

/// A rewrite system read from (or written to) a presentation file.
struct PresentationFile {
  std::string name;
  QSystem system;
};

namespace detail {

// Reader for one line of rule text; columns are 1-based within the line.
class PolyReader {
public:
  PolyReader(std::string_view text, const Alphabet& alphabet, std::size_t line, std::size_t column0)
      : s_(text), al_(alphabet), line_(line), col0_(column0) {}

  Monomial monomial() {
    blanks();
    if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      return {};
    }
    Monomial m;
    for (;;) {
      m.push_back(generator());
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        continue;
      }
      return m;
    }
  }

  QPoly polynomial() {
    QPoly p;
    blanks();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        blanks();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(p, sign);
      blanks();
    }
    if (first) fail("empty polynomial");
    return p;
  }

  void expect_end() {
    blanks();
    if (pos_ < s_.size()) fail("unexpected trailing text");
  }

  std::size_t position() const { return pos_; }
  void blanks() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_); }

private:
  void term(QPoly& p, int sign) {
    if (pos_ >= s_.size()) fail("expected a term");
    RationalFunction c(sign);
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') {
      const std::size_t start = pos_;
      coefficient_extent();
      c = c * parse_scalar(s_.substr(start, pos_ - start), line_, col0_ + start);
      blanks();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        blanks();
        p.add_term(monomial(), c);
      } else {
        p.add_term(Monomial(), c);
      }
      return;
    }
    p.add_term(monomial(), c);
  }

  // Advances over "n", "n/m", "(...)" or "(...)/(...)".
  void coefficient_extent() {
    if (s_[pos_] == '(') {
      group();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' after '/'");
        group();
      }
      return;
    }
    digits();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      digits();
    }
  }
  void group() {
    int depth = 0;
    do {
      if (pos_ >= s_.size()) fail("unbalanced parenthesis");
      if (s_[pos_] == '(') ++depth;
      if (s_[pos_] == ')') --depth;
      ++pos_;
    } while (depth > 0);
  }
  void digits() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Generator generator() {
    if (pos_ >= s_.size() || !is_name_start(s_[pos_])) fail("expected a generator name");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    auto g = al_.find(name);
    if (!g) throw ParseError("unknown generator '" + std::string(name) + "'", line_, col0_ + start);
    return *g;
  }

  std::string_view s_;
  const Alphabet& al_;
  std::size_t line_, col0_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a polynomial in rule syntax over the given alphabet.
inline QPoly parse_polynomial(std::string_view text, const Alphabet& alphabet) {
  detail::PolyReader r(text, alphabet, 1, 1);
  QPoly p = r.polynomial();
  r.expect_end();
  return p;
}

/// File layout:
///   name: <label>          (optional)
///   generators:
///   <name>                 (one per line, smallest first)
///   rules:
///   <monomial> -> <polynomial>
/// Blank lines and lines starting with '#' are ignored.
inline PresentationFile read_presentation(std::istream& in) {
  enum class Section { none, generators, rules } section = Section::none;
  PresentationFile out;
  std::vector<std::string> names;
  bool have_system = false;
  std::string raw;
  std::size_t lineno = 0;
  auto ensure_system = [&](std::size_t line) {
    if (have_system) return;
    if (names.empty()) throw ParseError("no generators declared before 'rules:'", line, 1);
    try {
      out.system = QSystem(Alphabet(names));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line, 1);
    }
    have_system = true;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
    if (line.starts_with("name:")) {
      out.name = std::string(detail::trim(line.substr(5)));
      continue;
    }
    if (line == "generators:") {
      if (section != Section::none) throw ParseError("'generators:' must come first", lineno, indent + 1);
      section = Section::generators;
      continue;
    }
    if (line == "rules:") {
      if (section != Section::generators) throw ParseError("'rules:' must follow 'generators:'", lineno, indent + 1);
      ensure_system(lineno);
      section = Section::rules;
      continue;
    }
    switch (section) {
      case Section::none:
        throw ParseError("expected 'generators:'", lineno, indent + 1);
      case Section::generators: {
        for (std::size_t k = 0; k < line.size(); ++k)
          if (!(k == 0 ? is_name_start(line[k]) : is_name_char(line[k])))
            throw ParseError("invalid generator name", lineno, indent + k + 1);
        names.emplace_back(line);
        break;
      }
      case Section::rules: {
        const std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected '->'", lineno, indent + line.size() + 1);
        detail::PolyReader lhs_reader(line.substr(0, arrow), out.system.alphabet(), lineno, indent + 1);
        Monomial lhs = lhs_reader.monomial();
        lhs_reader.expect_end();
        detail::PolyReader rhs_reader(line.substr(arrow + 2), out.system.alphabet(), lineno, indent + arrow + 3);
        QPoly rhs = rhs_reader.polynomial();
        try {
          out.system.add_rule(std::move(lhs), std::move(rhs));
        } catch (const DomainError& e) {
          throw ParseError(e.what(), lineno, indent + 1);
        }
        break;
      }
    }
  }
  if (section == Section::none) throw ParseError("missing 'generators:' section", lineno + 1, 1);
  ensure_system(lineno + 1);
  return out;
}

inline PresentationFile parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in);
}

inline PresentationFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file '" + path + "'");
  return read_presentation(in);
}

inline std::string format_presentation(const QSystem& sys, const std::string& name = {}) {
  std::string out;
  if (!name.empty()) out += "name: " + name + "\n";
  out += "generators:\n";
  for (const auto& n : sys.alphabet().names()) out += n + "\n";
  out += "rules:\n";
  for (const auto& r : sys.rules())
    out += r.lhs.to_string(sys.alphabet()) + " -> " + r.rhs.to_string(sys.alphabet()) + "\n";
  return out;
}

}  // namespace cosov::diamond
