#include "cosov/exact/matrix_io.hpp"
#include "cosov/exact/predicates.hpp"
#include "cosov/exact/similarity.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace cosov;
using RMat = Matrix<Rational>;
using QMat = Matrix<RationalFunction>;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }
const RationalFunction q = RationalFunction::q();

QMat f_q() { return QMat{{q.inverse(), 0}, {0, q}}; }

RMat random_matrix(std::mt19937_64& rng, std::size_t n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  RMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

RationalFunction random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), deg(0, 2);
  auto poly = [&] {
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return RationalPolynomial(v);
  };
  RationalPolynomial den = poly();
  if (den.is_zero()) den = RationalPolynomial(1);
  return RationalFunction(poly(), den);
}

}  // namespace

TEST_CASE("scalar parsing and canonical form", "[exact]") {
  CHECK(parse_scalar("-2/4") == RationalFunction(r(-1, 2)));
  CHECK(parse_scalar("q + q^-1") == q + q.inverse());
  CHECK(parse_scalar("2*q^3") == RationalFunction(2) * q.pow(3));
  CHECK(parse_scalar("(1+q^2)/(q)") == (RationalFunction(1) + q * q) / q);
  CHECK(parse_scalar("(2*q^2 - 2)/(2*q - 2)") == q + RationalFunction(1));

  const RationalFunction f = parse_scalar("(2*q - 2)/(4*q^2 - 4)");
  CHECK(f.denominator().leading() == Rational(1));
  CHECK(RationalPolynomial::gcd(f.numerator(), f.denominator()).is_one());
  CHECK(RationalFunction(0).denominator().is_one());

  try {
    parse_scalar("3/x", 4, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("q"), ParseError);
}

TEST_CASE("field axioms on random rational functions", "[exact][property]") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(1));
  }
}

TEST_CASE("matrix files", "[exact]") {
  const QMat m = parse_matrix("# F_q\n2 2\nq^-1 0\n\n0 q\n");
  CHECK(m == f_q());
  CHECK(parse_matrix(format_matrix_file(m)) == m);
  CHECK(!is_rational_mode(m));
  CHECK_THROWS_AS(to_rational(m), DomainError);

  auto err = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(err("2 2\n1 0\n0 1 7\n") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(err("2 2\n1 0\n0 z\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(err("2 2\n1 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(err("2 x\n").first == 1);
  CHECK(err("").first == 1);
}

TEST_CASE("trace and inverse", "[exact]") {
  CHECK(trace(f_q()) == q + q.inverse());
  CHECK(trace(RMat::identity(3)) == Rational(3));
  CHECK(trace(RMat::diagonal({r(1, 2), r(2)})) == r(5, 2));
  CHECK_THROWS_AS(trace(RMat(2, 3)), DomainError);

  CHECK(inverse(f_q()) == QMat{{q, 0}, {0, q.inverse()}});
  CHECK(inverse(RMat{{r(2)}}) == RMat{{r(1, 2)}});
  const RMat l{{r(1), r(0)}, {r(1), r(1)}};
  CHECK(inverse(l) == RMat{{r(1), r(0)}, {r(-1), r(1)}});
  CHECK(oracle::is_identity(l * inverse(l)));

  try {
    inverse(RMat{{r(1), r(2)}, {r(2), r(4)}});
    FAIL("expected SingularMatrix");
  } catch (const SingularMatrix& e) {
    CHECK(std::string(e.what()).find("determinant") != std::string::npos);
  }
}

TEST_CASE("inverse of inverse on random matrices", "[exact][property]") {
  std::mt19937_64 rng(5);
  int tested = 0;
  for (int k = 0; k < 60; ++k) {
    const RMat m = random_matrix(rng, 1 + static_cast<std::size_t>(k % 5));
    if (!is_invertible(m)) continue;
    ++tested;
    const RMat inv = inverse(m);
    CHECK(oracle::is_identity(m * inv));
    CHECK(oracle::is_identity(inv * m));
    CHECK(inverse(inv) == m);
    CHECK(determinant(m) * determinant(inv) == Rational(1));
  }
  CHECK(tested > 30);
}

TEST_CASE("normalization predicates", "[exact]") {
  CHECK(is_normalized(f_q()));
  CHECK(!is_normalized(RMat::diagonal({r(1), r(2)})));
  const RMat rot{{r(0), r(-1)}, {r(1), r(0)}};  // equal to the transpose of its inverse
  CHECK(rot == inverse(rot).transpose());
  CHECK(is_normalized(rot));

  const RMat both_zero{{r(0), r(1)}, {r(1), r(0)}};
  CHECK(trace(both_zero) == Rational(0));
  CHECK(trace(inverse(both_zero)) == Rational(0));
  CHECK(is_normalizable(both_zero));
  const RMat zero_one = RMat::diagonal({r(7, 6), r(7, 3), r(-7, 2)});  // tr 0, tr^-1 1
  CHECK(trace(zero_one) == Rational(0));
  CHECK(trace(inverse(zero_one)) == Rational(1));
  CHECK(!is_normalizable(zero_one));
  CHECK(is_normalizable(f_q()));
  CHECK(is_normalizable(RMat::diagonal({r(1), r(2)})));
  CHECK_THROWS_AS(is_normalized(RMat{{r(0), r(0)}, {r(0), r(0)}}), SingularMatrix);
}

TEST_CASE("is_normalizable is false exactly when one trace vanishes", "[exact][property]") {
  // 3x3 lets tr(F) = 0 while tr(F^-1) != 0.
  const RMat a = RMat::diagonal({r(1), r(2), r(-3)});  // tr 0, tr^-1 = 1 + 1/2 - 1/3 = 7/6
  CHECK(trace(a) == Rational(0));
  CHECK(!is_normalizable(a));
  CHECK(!is_normalizable(inverse(a)));  // tr 7/6, tr^-1 0
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const RMat m = random_matrix(rng, 3, -3, 3);
    if (!is_invertible(m)) continue;
    const bool t0 = trace(m) == Rational(0), i0 = trace(inverse(m)) == Rational(0);
    CHECK(is_normalizable(m) == (t0 == i0));
  }
}

TEST_CASE("genericity by trace", "[exact]") {
  // diag(x, 1/x) is normalized with trace x + 1/x.
  auto normalized = [](Rational x) { return RMat::diagonal({x, Rational(1) / x}); };
  CHECK(is_generic(normalized(r(2))));     // tr 5/2
  CHECK(is_generic(normalized(r(1))));     // tr 2, q = 1 is allowed
  CHECK(is_generic(normalized(r(-1))));    // tr -2, q = -1 is allowed
  const RMat tr3{{r(0), r(-1)}, {r(1), r(3)}};  // companion of q^2 - 3q + 1
  CHECK(is_normalized(tr3));
  CHECK(is_generic(tr3));
  const RMat tr1{{r(0), r(-1)}, {r(1), r(1)}};
  CHECK(is_normalized(tr1));
  CHECK(!is_generic(tr1));
  const RMat tr0{{r(0), r(-1)}, {r(1), r(0)}};
  CHECK(!is_generic(tr0));
  const RMat trm1{{r(0), r(-1)}, {r(1), r(-1)}};
  CHECK(!is_generic(trm1));
  CHECK(!is_generic(RMat::diagonal({r(1), r(2)})));  // not normalized
}

TEST_CASE("similarity", "[exact]") {
  CHECK(!similar(RMat::diagonal({r(1), r(2)}), RMat::diagonal({r(1), r(3)})));
  CHECK(similar(RMat{{r(0), r(-1)}, {r(1), r(0)}}, RMat{{r(0), r(1)}, {r(-1), r(0)}}));
  // same characteristic polynomial, different minimal polynomial
  CHECK(!similar(RMat{{r(1), r(1)}, {r(0), r(1)}}, RMat::identity(2)));
  CHECK_THROWS(similar(RMat::identity(2), RMat::identity(3)));
}

TEST_CASE("similarity agrees with conjugation and characteristic polynomials", "[exact][property]") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const RMat a = random_matrix(rng, n, -3, 3);
    const RMat p = oracle::random_unimodular(rng, n), p2 = oracle::random_unimodular(rng, n);
    const RMat b = p * a * inverse(p), c = p2 * b * inverse(p2);
    CHECK(similar(a, b));
    CHECK(similar(b, a));
    CHECK(similar(a, c));
    CHECK(oracle::char_poly(a) == oracle::char_poly(b));
    const RMat d = random_matrix(rng, n, -3, 3);
    if (oracle::char_poly(a) != oracle::char_poly(d)) CHECK(!similar(a, d));
    // the invariant factors multiply to the characteristic polynomial
    RationalPolynomial prod(1);
    for (const auto& f : invariant_factors(a)) prod = prod * f;
    CHECK(prod == RationalPolynomial(oracle::char_poly(a)));
  }
}

TEST_CASE("Hopf isomorphism classes of generic matrices", "[exact]") {
  const RMat e = RMat::diagonal({r(2), r(1, 2)});
  const RMat p{{r(1), r(1)}, {r(0), r(1)}};
  const auto v1 = hopf_isomorphic(e, p * e * inverse(p));
  CHECK(v1.isomorphic);
  CHECK(v1.condition == IsoCondition::conjugate);

  const RMat g{{r(0), r(-1)}, {r(1), r(3)}};
  const auto v2 = hopf_isomorphic(g, inverse(g).transpose());
  CHECK(v2.isomorphic);

  const RMat g3 = RMat::diagonal({r(2), r(1, 2), r(1)});  // tr = tr^-1 = 7/2
  CHECK(!hopf_isomorphic(e, g3).isomorphic);
  CHECK(!hopf_isomorphic(e, RMat::diagonal({r(3), r(1, 3)})).isomorphic);
  CHECK_THROWS_AS(hopf_isomorphic(e, RMat{{r(0), r(-1)}, {r(1), r(1)}}), HypothesisError);
}
