#include "cosov/fusion/fusion.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cosov;
using namespace cosov::fusion;

namespace {

Word w(const char* s) { return Word::parse(s); }

FusionElement from_oracle(const oracle::WordPoly& p) {
  FusionElement r;
  for (const auto& [s, c] : p) r.add(s.empty() ? Word() : Word::parse(s), c);
  return r;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string s;
  for (std::size_t k = len(rng); k > 0; --k) s += bit(rng) ? 'b' : 'a';
  return s.empty() ? Word() : Word::parse(s);
}

}  // namespace

TEST_CASE("word syntax", "[fusion]") {
  CHECK(w("e").empty());
  CHECK(w("abba").to_string() == "abba");
  CHECK(Word().to_string() == "e");
  try {
    Word::parse("abxa");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(Word::parse(""), ParseError);
  CHECK(w("b") > w("a"));
  CHECK(w("aa") > w("b"));
}

TEST_CASE("bar involution", "[fusion]") {
  CHECK(bar(Word()) == Word());
  CHECK(bar(w("ab")) == w("ab"));
  CHECK(bar(w("aab")) == w("abb"));
  CHECK(dual(w("a")) == w("b"));
  CHECK(dual(w("ab")) == w("ab"));
  CHECK(dual(Word()) == Word());
  for (const auto& x : all_words(4)) {
    CHECK(bar(bar(x)) == x);
    CHECK(x.bar().to_string() == (x.empty() ? "e" : oracle::bar(x.to_string())));
    for (const auto& y : all_words(4)) CHECK(bar(x * y) == bar(y) * bar(x));
  }
}

TEST_CASE("odot examples", "[fusion]") {
  CHECK(odot(Word(), w("abb")) == FusionElement(w("abb")));
  CHECK(odot(w("aba"), w("b")).to_string() == "abab + ab");
  CHECK(odot(w("a"), w("a")).to_string() == "aa");
  CHECK(odot(w("b"), w("a")).to_string() == "ba + e");
  CHECK(fuse(w("a"), w("b")).to_string() == "ab + e");
  CHECK(fuse(w("aab"), Word()).to_string() == "aab");
  // golden value: only the trivial factorization contributes
  CHECK(fuse(w("ab"), w("ba")).to_string() == "abba");
  CHECK(fuse(w("ab"), w("ab")).to_string() == "abab + ab + e");
}

TEST_CASE("fusion table", "[fusion]") {
  const auto t1 = fusion_table(1);
  CHECK(t1.size() == 9);
  CHECK(fusion_table(2).size() == 49);
  const auto t = fusion_table(2);
  for (const auto& e : t) CHECK(e.product == odot(e.x, e.y));
  auto find = [&](const char* x, const char* y) {
    for (const auto& e : t)
      if (e.x == w(x) && e.y == w(y)) return e.product;
    return FusionElement();
  };
  CHECK(find("a", "b").to_string() == "ab + e");
  CHECK(find("b", "b").to_string() == "bb");
  CHECK(table_from_json(nlohmann::json::parse(table_to_json(t).dump())) == t);
  CHECK_THROWS_AS(fusion_table(kMaxTableLength + 1), BoundError);
  CHECK(format_table_text(t1).find("a * b = ab + e\n") != std::string::npos);
}

TEST_CASE("rendering and machine format", "[fusion]") {
  FusionElement u = odot(w("ab"), w("ab"));
  CHECK(u.to_json().dump() == R"([["e",1],["ab",1],["abab",1]])");
  CHECK(FusionElement::from_json(u.to_json()) == u);
  FusionElement v = u - 2 * FusionElement(w("b"));
  CHECK(v.to_string() == "abab + ab - 2 b + e");
  CHECK(FusionElement().to_string() == "0");
  CHECK_THROWS_AS(FusionElement::from_json(nlohmann::json::parse(R"([["ax",1]])")), ParseError);
}

TEST_CASE("odot agrees with the free-algebra model", "[fusion][oracle]") {
  for (const auto& x : all_words(4))
    for (const auto& y : all_words(4)) {
      const auto ox = x.empty() ? std::string() : x.to_string();
      const auto oy = y.empty() ? std::string() : y.to_string();
      CHECK(odot(x, y) == from_oracle(oracle::fuse(ox, oy)));
    }
}

TEST_CASE("dimensions", "[fusion]") {
  CHECK(dim(w("a"), 7) == 7);
  CHECK(dim(w("ab"), 2) == 3);
  CHECK(dim(w("aa"), 2) == 4);
  CHECK(dim(Word(), 5) == 1);
  CHECK_THROWS_AS(dim(w("a"), 1), DomainError);
  for (std::int64_t n : {2, 3, 5})
    for (const auto& x : all_words(6)) CHECK(dim(x, n) == oracle::dim(x.empty() ? "" : x.to_string(), n));
}

TEST_CASE("ring axioms", "[fusion][property]") {
  const auto words3 = all_words(3);
  for (const auto& x : words3)
    for (const auto& y : words3)
      for (const auto& z : words3) CHECK(odot(odot(x, y), FusionElement(z)) == odot(FusionElement(x), odot(y, z)));
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const Word x = random_word(rng, 6), y = random_word(rng, 6), z = random_word(rng, 6);
    CHECK(odot(odot(x, y), FusionElement(z)) == odot(FusionElement(x), odot(y, z)));
  }
  for (const auto& x : all_words(6)) {
    CHECK(odot(Word(), x) == FusionElement(x));
    CHECK(odot(x, Word()) == FusionElement(x));
  }
}

TEST_CASE("products of simples", "[fusion][property]") {
  for (const auto& x : all_words(5))
    for (const auto& y : all_words(5)) {
      const auto p = odot(x, y);
      std::size_t valid_g = 0;
      for (std::size_t k = 0; k <= std::min(x.size(), y.size()); ++k)
        if (y.starts_with(x.suffix(k).bar())) ++valid_g;
      CHECK(p.size() == valid_g);
      for (const auto& [word, m] : p.terms()) CHECK(m == 1);
      for (std::int64_t n : {2, 3, 5}) CHECK(dim(p, n) == dim(x, n) * dim(y, n));
      if (x.size() <= 4 && y.size() <= 4) CHECK((p.multiplicity(Word()) == 1) == (y == bar(x)));
    }
}
