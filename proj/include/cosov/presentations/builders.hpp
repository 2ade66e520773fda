#pragma once

#include "cosov/diamond/alphabet.hpp"
#include "cosov/diamond/presentation_io.hpp"
#include "cosov/diamond/rewrite_system.hpp"
#include "cosov/errors.hpp"
#include "cosov/exact/matrix.hpp"
#include "cosov/exact/matrix_io.hpp"
#include "cosov/exact/predicates.hpp"
#include "cosov/exact/rational_function.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cosov::presentations {

using Scalar = RationalFunction;
using ScalarMatrix = Matrix<Scalar>;
using diamond::Generator;
using diamond::Monomial;
using diamond::QPoly;
using diamond::QSystem;

enum class Kind { HEF, HQ, HPLUSQ, SLQ2, FREEPROD, AAUT };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::HEF: return "HEF";
    case Kind::HQ: return "HQ";
    case Kind::HPLUSQ: return "HPLUSQ";
    case Kind::SLQ2: return "SLQ2";
    case Kind::FREEPROD: return "FREEPROD";
    case Kind::AAUT: return "AAUT";
  }
  return "?";
}

/// A named presentation together with its parameters and rewrite system.
struct PresentationSpec {
  Kind kind;
  std::optional<ScalarMatrix> E, F;
  std::optional<Scalar> q;
  QSystem system;

  const diamond::Alphabet& alphabet() const { return system.alphabet(); }
  std::size_t rule_count() const { return system.rules().size(); }
  std::string to_file() const { return diamond::format_presentation(system, kind_name(kind)); }
};

/// Whether the trace conditions tr(E) = tr(F) and tr(E^-1) = tr(F^-1) hold.
/// Throws SingularMatrix when either matrix is singular.
inline bool trace_conditions(const ScalarMatrix& E, const ScalarMatrix& F) {
  const Scalar te_inv = trace(checked_inverse(E)), tf_inv = trace(checked_inverse(F));
  return trace(E) == trace(F) && te_inv == tf_inv;
}

enum class Mode { checked, unchecked };

namespace detail {

inline std::string index_name(char letter, std::size_t i, std::size_t j, bool wide) {
  return wide ? std::string(1, letter) + std::to_string(i) + "_" + std::to_string(j)
              : std::string(1, letter) + std::to_string(i) + std::to_string(j);
}

inline Scalar kronecker(std::size_t i, std::size_t j) { return Scalar(i == j ? 1 : 0); }

inline void require_q(const Scalar& q) {
  if (q.is_zero()) throw DomainError("q must be nonzero");
}

// Relations of H(E,F) over an alphabet whose first m*n letters are the v's in
// decreasing index order and whose next m*n letters are the u's in increasing
// index order. Extra letters may follow.
inline void add_hef_rules(QSystem& sys, const ScalarMatrix& E, const ScalarMatrix& F) {
  const std::size_t m = E.rows(), n = F.rows();
  // 1-based indices as in the usual matrix notation.
  auto u = [&](std::size_t i, std::size_t j) { return static_cast<Generator>(m * n + (i - 1) * n + (j - 1)); };
  auto v = [&](std::size_t i, std::size_t j) { return static_cast<Generator>(m * n - 1 - ((i - 1) * n + (j - 1))); };
  auto e = [&](std::size_t i, std::size_t j) { return E(i - 1, j - 1); };
  auto f = [&](std::size_t i, std::size_t j) { return F(i - 1, j - 1); };
  const ScalarMatrix Finv = inverse(F);
  const Scalar f11inv = f(1, 1).inverse();
  auto lbl = [](const char* fam, std::size_t i, std::size_t j) {
    return std::string(fam) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };

  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      QPoly rhs = QPoly::constant(kronecker(i, j));
      for (std::size_t k = 1; k < n; ++k) rhs.add_term({u(i, k), v(j, k)}, Scalar(-1));
      sys.add_rule({u(i, n), v(j, n)}, rhs, lbl("u.v last column", i, j));
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      QPoly rhs = QPoly::constant(f11inv * e(i, j));
      for (std::size_t k = 2; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l)
          if (!f(k, l).is_zero()) rhs.add_term({v(i, k), u(j, l)}, -(f11inv * f(k, l)));
      sys.add_rule({v(i, 1), u(j, 1)}, rhs, lbl("v.u first column", i, j));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      QPoly rhs = QPoly::constant(kronecker(i, j));
      for (std::size_t k = 2; k <= m; ++k) rhs.add_term({v(k, i), u(k, j)}, Scalar(-1));
      sys.add_rule({v(1, i), u(1, j)}, rhs, lbl("v.u first row", i, j));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      QPoly rhs = QPoly::constant(e(m, m) * Finv(i - 1, j - 1));
      for (std::size_t k = 1; k < m; ++k) rhs.add_term({u(k, i), v(k, j)}, -(e(m, m) * e(k, k).inverse()));
      sys.add_rule({u(m, i), v(m, j)}, rhs, lbl("u.v last row", i, j));
    }
}

inline std::vector<std::string> hef_names(std::size_t m, std::size_t n) {
  const bool wide = m > 9 || n > 9;
  std::vector<std::string> names;
  for (std::size_t i = m; i >= 1; --i)
    for (std::size_t j = n; j >= 1; --j) names.push_back(index_name('v', i, j, wide));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back(index_name('u', i, j, wide));
  return names;
}

inline ScalarMatrix f_q(const Scalar& q) { return ScalarMatrix{{q.inverse(), Scalar(0)}, {Scalar(0), q}}; }

// alpha..delta are u11..u22 and alpha*..delta* are v11..v22.
inline std::vector<std::string> hq_names() {
  return {"delta*", "gamma*", "beta*", "alpha*", "alpha", "beta", "gamma", "delta"};
}

}  // namespace detail

/// H(E,F) for E (m x m) diagonal and F (n x n) lower-triangular, m, n >= 2.
/// Generators: v's in decreasing index order, then u's in increasing index
/// order, so every v is below every u. In unchecked mode only the trace
/// conditions are skipped, which is how non-confluent systems are produced for
/// negative tests.
inline PresentationSpec build_hef(const ScalarMatrix& E, const ScalarMatrix& F, Mode mode = Mode::checked) {
  if (!E.is_square() || !F.is_square()) throw HypothesisError("E and F must be square");
  if (E.rows() < 2 || F.rows() < 2) throw HypothesisError("E and F must have size at least 2");
  if (!E.is_diagonal()) throw HypothesisError("E must be diagonal");
  if (!F.is_lower_triangular()) throw HypothesisError("F must be lower-triangular");
  if (!is_invertible(E)) throw HypothesisError("E must be invertible");
  if (!is_invertible(F)) throw HypothesisError("F must be invertible");
  if (mode == Mode::checked) {
    if (trace(E) != trace(F)) throw HypothesisError("trace condition fails: tr(E) != tr(F)");
    if (trace(inverse(E)) != trace(inverse(F))) throw HypothesisError("trace condition fails: tr(E^-1) != tr(F^-1)");
  }
  PresentationSpec pres{Kind::HEF, E, F, std::nullopt, QSystem(diamond::Alphabet(detail::hef_names(E.rows(), F.rows())))};
  detail::add_hef_rules(pres.system, E, F);
  return pres;
}

/// H(q) = H(F_q, F_q) with F_q = diag(q^-1, q), written in alpha, ..., delta*.
inline PresentationSpec build_hq(const Scalar& q) {
  detail::require_q(q);
  const ScalarMatrix Fq = detail::f_q(q);
  PresentationSpec pres{Kind::HQ, Fq, Fq, q, QSystem(diamond::Alphabet(detail::hq_names()))};
  detail::add_hef_rules(pres.system, Fq, Fq);
  return pres;
}

/// H+(q): H(q) with an invertible t, ordered ... < delta < tinv < t.
inline PresentationSpec build_hplusq(const Scalar& q) {
  detail::require_q(q);
  const ScalarMatrix Fq = detail::f_q(q);
  auto names = detail::hq_names();
  names.push_back("tinv");
  names.push_back("t");
  PresentationSpec pres{Kind::HPLUSQ, Fq, Fq, q, QSystem(diamond::Alphabet(names))};
  detail::add_hef_rules(pres.system, Fq, Fq);
  const auto& al = pres.system.alphabet();
  const Generator t = al.at("t"), ti = al.at("tinv");
  const Generator a = al.at("alpha"), b = al.at("beta"), c = al.at("gamma"), d = al.at("delta");
  const Generator as = al.at("alpha*"), bs = al.at("beta*"), cs = al.at("gamma*"), ds = al.at("delta*");
  const Scalar qi = q.inverse();
  auto add = [&](Monomial lhs, Monomial rm, Scalar c0) {
    pres.system.add_rule(std::move(lhs), QPoly(rm, std::move(c0)), "t");
  };
  add({t, ti}, {ti, t}, 1);
  pres.system.add_rule({ti, t}, QPoly::constant(1), "t");
  add({ti, a}, {ds, t}, 1);
  add({t, ds}, {a, ti}, 1);
  add({ti, b}, {cs, t}, -qi);
  add({t, cs}, {b, ti}, -q);
  add({ti, c}, {bs, t}, -q);
  add({t, bs}, {c, ti}, -qi);
  add({ti, d}, {as, t}, 1);
  add({t, as}, {d, ti}, 1);
  return pres;
}

namespace detail {

// Quantum SL(2) relations ba = q ab, ca = q ac, db = q bd, dc = q cd,
// cb = bc = q(ad - 1), da = q bc + 1, oriented for b < c < a < d.
inline void add_slq2_rules(QSystem& sys, const Scalar& q) {
  const auto& al = sys.alphabet();
  const Generator a = al.at("a"), b = al.at("b"), c = al.at("c"), d = al.at("d");
  const Scalar qi = q.inverse();
  sys.add_rule({a, b}, QPoly({b, a}, qi), "sl2");
  sys.add_rule({a, c}, QPoly({c, a}, qi), "sl2");
  sys.add_rule({c, b}, QPoly({b, c}), "sl2");
  sys.add_rule({d, b}, QPoly({b, d}, q), "sl2");
  sys.add_rule({d, c}, QPoly({c, d}, q), "sl2");
  sys.add_rule({d, a}, QPoly({b, c}, q) + QPoly::constant(1), "sl2");
  sys.add_rule({a, d}, QPoly({b, c}, qi) + QPoly::constant(1), "sl2");
}

}  // namespace detail

/// O(SL_q(2)) over generators b < c < a < d.
inline PresentationSpec build_slq2(const Scalar& q) {
  detail::require_q(q);
  PresentationSpec pres{Kind::SLQ2, std::nullopt, std::nullopt, q, QSystem(diamond::Alphabet({"b", "c", "a", "d"}))};
  detail::add_slq2_rules(pres.system, q);
  return pres;
}

/// k[z, z^-1] * O(SL_q(2)) over zinv < z < b < c < a < d.
inline PresentationSpec build_freeprod(const Scalar& q) {
  detail::require_q(q);
  PresentationSpec pres{Kind::FREEPROD, std::nullopt, std::nullopt, q,
                        QSystem(diamond::Alphabet({"zinv", "z", "b", "c", "a", "d"}))};
  const auto& al = pres.system.alphabet();
  const Generator z = al.at("z"), zi = al.at("zinv");
  pres.system.add_rule({z, zi}, QPoly::constant(1), "z");
  pres.system.add_rule({zi, z}, QPoly::constant(1), "z");
  detail::add_slq2_rules(pres.system, q);
  return pres;
}

}  // namespace cosov::presentations
