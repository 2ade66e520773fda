#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/matrix.hpp"
#include "cosov/exact/polynomial.hpp"
#include "cosov/exact/predicates.hpp"
#include "cosov/exact/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cosov {

/// Invariant factors of a square matrix A: the nonconstant monic diagonal
/// entries d_1 | d_2 | ... of the Smith normal form of xI - A over Field[x].
template <class Field>
std::vector<Polynomial<Field>> invariant_factors(const Matrix<Field>& a) {
  using Poly = Polynomial<Field>;
  if (!a.is_square()) throw DomainError("invariant factors of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Poly(-a(i, j));
      if (i == j) m[i][j] += Poly::x();
    }

  auto swap_rows = [&](std::size_t r, std::size_t s) { std::swap(m[r], m[s]); };
  auto swap_cols = [&](std::size_t c, std::size_t d) {
    for (auto& row : m) std::swap(row[c], row[d]);
  };

  std::vector<Poly> diag;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Smallest-degree nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (pi == n || m[i][j].degree() < m[pi][pj].degree())) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;  // trailing block is zero
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [quo, rem] = Poly::divmod(m[i][k], m[k][k]);
        for (std::size_t j = k; j < n; ++j) m[i][j] -= quo * m[k][j];
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [quo, rem] = Poly::divmod(m[k][j], m[k][k]);
        for (std::size_t i = k; i < n; ++i) m[i][j] -= quo * m[i][k];
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(m[i][j] % m[k][k]).is_zero()) {
            for (std::size_t c = k; c < n; ++c) m[k][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(m[k][k].monic());
  }

  std::vector<Poly> factors;
  for (auto& d : diag)
    if (d.degree() >= 1) factors.push_back(std::move(d));
  return factors;
}

/// Companion matrix of a monic polynomial x^d + c_{d-1} x^{d-1} + ... + c_0.
template <class Field>
Matrix<Field> companion(const Polynomial<Field>& p) {
  const int d = p.degree();
  if (d < 1 || p.leading() != Field(1)) throw DomainError("companion matrix needs a monic nonconstant polynomial");
  Matrix<Field> c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int i = 1; i < d; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = Field(1);
  for (int i = 0; i < d; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(d - 1)) = -p.coefficient(static_cast<std::size_t>(i));
  return c;
}

/// Frobenius normal form: block-diagonal companion matrices of the invariant
/// factors, in divisibility order.
template <class Field>
Matrix<Field> rational_canonical_form(const Matrix<Field>& a) {
  auto factors = invariant_factors(a);
  Matrix<Field> r(a.rows(), a.cols());
  std::size_t off = 0;
  for (const auto& f : factors) {
    Matrix<Field> c = companion(f);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) r(off + i, off + j) = c(i, j);
    off += c.rows();
  }
  return r;
}

/// A and B are conjugate over the base field.
template <class Field>
bool similar(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (!a.is_square() || !b.is_square()) throw DomainError("similarity needs square matrices");
  if (a.rows() != b.rows()) throw DomainError("similarity needs matrices of the same size");
  return rational_canonical_form(a) == rational_canonical_form(b);
}

/// Which of the four conjugacy conditions certifies H(E) ~= H(F).
enum class IsoCondition {
  conjugate,             // F = P E P^-1
  negated_conjugate,     // F = -P E P^-1
  dual_conjugate,        // tF^-1 = P E P^-1
  negated_dual_conjugate // tF^-1 = -P E P^-1
};

inline std::string describe(IsoCondition c) {
  switch (c) {
    case IsoCondition::conjugate: return "condition i: F = P E P^-1";
    case IsoCondition::negated_conjugate: return "condition i: F = -P E P^-1";
    case IsoCondition::dual_conjugate: return "condition ii: tF^-1 = P E P^-1";
    case IsoCondition::negated_dual_conjugate: return "condition ii: tF^-1 = -P E P^-1";
  }
  return "";
}

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<IsoCondition> condition;
};

/// Isomorphism test for the Hopf algebras H(E), H(F) of generic matrices.
/// Non-generic input is rejected: the classification only holds for generic E, F.
inline IsoVerdict hopf_isomorphic(const Matrix<Rational>& e, const Matrix<Rational>& f) {
  if (!e.is_square() || !f.is_square()) throw DomainError("expected square matrices");
  if (e.rows() < 2 || f.rows() < 2) throw HypothesisError("isomorphism test needs matrices of size at least 2");
  if (!is_generic(e)) throw HypothesisError("E is not generic; the isomorphism classification requires generic matrices");
  if (!is_generic(f)) throw HypothesisError("F is not generic; the isomorphism classification requires generic matrices");
  if (e.rows() != f.rows()) return {};
  const Matrix<Rational> dual = inverse(f).transpose();
  const Matrix<Rational> neg_e = -e;
  if (similar(f, e)) return {true, IsoCondition::conjugate};
  if (similar(f, neg_e)) return {true, IsoCondition::negated_conjugate};
  if (similar(dual, e)) return {true, IsoCondition::dual_conjugate};
  if (similar(dual, neg_e)) return {true, IsoCondition::negated_dual_conjugate};
  return {};
}

}  // namespace cosov
