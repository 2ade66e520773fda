#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/matrix.hpp"
#include "cosov/exact/rational.hpp"
#include "cosov/exact/rational_function.hpp"
#include "cosov/exact/scalar_parse.hpp"

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace cosov {

/// Space-separated rows, one per line, entries in compact form.
template <class Field>
std::string to_string(const Matrix<Field>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      std::string e = to_string(m(i, j));
      std::erase(e, ' ');
      out += e;
    }
    out += '\n';
  }
  return out;
}

/// Matrix file text: a "<rows> <cols>" header followed by the rows.
template <class Field>
std::string format_matrix_file(const Matrix<Field>& m) {
  return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + to_string(m);
}

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_blanks(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool blank_or_comment(const std::vector<Token>& toks) { return toks.empty() || toks[0].text[0] == '#'; }

inline std::size_t read_dimension(const Token& t, std::size_t line) {
  std::size_t value = 0;
  for (std::size_t k = 0; k < t.text.size(); ++k) {
    char c = t.text[k];
    if (c < '0' || c > '9') throw ParseError("expected a positive integer dimension", line, t.column + k);
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 10000) throw ParseError("dimension too large", line, t.column);
  }
  if (value == 0) throw ParseError("dimension must be positive", line, t.column);
  return value;
}

}  // namespace detail

/// Reads a matrix in the "<rows> <cols>" + rows format. Entries may involve q.
/// Blank lines and lines starting with '#' are ignored.
inline Matrix<RationalFunction> read_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::vector<std::vector<RationalFunction>> data;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_blanks(line);
    if (detail::blank_or_comment(toks)) continue;
    if (!have_header) {
      if (toks.size() != 2) throw ParseError("header must be '<rows> <cols>'", lineno, toks[0].column);
      rows = detail::read_dimension(toks[0], lineno);
      cols = detail::read_dimension(toks[1], lineno);
      have_header = true;
      continue;
    }
    if (data.size() == rows) throw ParseError("more rows than declared", lineno, toks[0].column);
    if (toks.size() != cols) {
      // Point at the first surplus entry, or just past the last one.
      std::size_t col = toks.size() > cols ? toks[cols].column : toks.back().column + toks.back().text.size();
      throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(toks.size()),
                       lineno, col);
    }
    std::vector<RationalFunction> row;
    row.reserve(cols);
    for (const auto& t : toks) row.push_back(parse_scalar(t.text, lineno, t.column));
    data.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("empty matrix file", lineno + 1, 1);
  if (data.size() != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(data.size()), lineno + 1, 1);
  Matrix<RationalFunction> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
  return m;
}

inline Matrix<RationalFunction> parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline Matrix<RationalFunction> load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

/// Restricts to rational mode: every entry must be free of q.
inline Matrix<Rational> to_rational(const Matrix<RationalFunction>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant())
        throw DomainError("rational mode required, but entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") = " + m(i, j).to_string() + " involves q");
  return m.map([](const RationalFunction& f) { return f.constant_value(); });
}

inline Matrix<RationalFunction> to_rational_function(const Matrix<Rational>& m) {
  return m.map([](const Rational& r) { return RationalFunction(r); });
}

inline bool is_rational_mode(const Matrix<RationalFunction>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

}  // namespace cosov
