#pragma once

#include "cosov/errors.hpp"
#include "cosov/exact/matrix.hpp"
#include "cosov/exact/rational.hpp"

namespace cosov {

/// Inverse of a matrix that must be square and invertible.
template <class Field>
Matrix<Field> checked_inverse(const Matrix<Field>& f) {
  if (!f.is_square()) throw DomainError("expected a square matrix");
  return inverse(f);  // throws SingularMatrix
}

/// tr(F) = tr(F^-1).
template <class Field>
bool is_normalized(const Matrix<Field>& f) {
  return trace(f) == trace(checked_inverse(f));
}

/// Some nonzero multiple lambda*F is normalized (over an algebraic closure of
/// the base field). This fails exactly when one of tr(F), tr(F^-1) vanishes
/// and the other does not, since lambda^2 = tr(F^-1)/tr(F) otherwise has a
/// root or lambda is unconstrained.
template <class Field>
bool is_normalizable(const Matrix<Field>& f) {
  const bool t0 = trace(f) == Field(0);
  const bool ti0 = trace(checked_inverse(f)) == Field(0);
  return t0 == ti0;
}

/// F is normalized and the roots of q^2 - tr(F) q + 1 are not roots of unity
/// of order >= 3. For rational t = tr(F), q + 1/q = t at such a root means
/// t = 2 cos(2 pi k / N), and the only rational values of that form with
/// N >= 3 are -1, 0 and 1 (Niven). t = 2 and t = -2 give q = 1 and q = -1.
inline bool is_generic(const Matrix<Rational>& f) {
  if (!is_normalized(f)) return false;
  const Rational t = trace(f);
  return t != -1 && t != 0 && t != 1;
}

}  // namespace cosov
