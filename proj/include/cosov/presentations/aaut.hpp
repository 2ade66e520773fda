#pragma once

#include "cosov/presentations/builders.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace cosov::presentations {

/// Relations of the quantum automorphism algebra A_aut(M_n, tr_F), each
/// stored as a polynomial that vanishes in the algebra. Data only: no
/// monomial order is known to make them a confluent system.
struct AautRelations {
  diamond::Alphabet alphabet;  // X_ij^kl, ordered by (i, j, k, l)
  /// multiplication, trace compatibility, unit, trace
  std::array<std::vector<QPoly>, 4> families;

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& f : families) s += f.size();
    return s;
  }
};

inline const char* aaut_family_name(std::size_t k) {
  static const char* names[] = {"multiplication", "trace compatibility", "unit", "trace"};
  return names[k];
}

inline AautRelations build_aaut(const ScalarMatrix& F) {
  const ScalarMatrix Finv = checked_inverse(F);  // throws SingularMatrix
  const std::size_t n = F.rows();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l)
          names.push_back("X" + std::to_string(i) + (n > 9 ? "_" : "") + std::to_string(j) + "^" + std::to_string(k) +
                          (n > 9 ? "_" : "") + std::to_string(l));
  AautRelations out{diamond::Alphabet(names), {}};
  // 0-based X_ij^kl
  auto X = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return static_cast<Generator>(((i * n + j) * n + k) * n + l);
  };
  auto delta = [](std::size_t a, std::size_t b) { return a == b; };

  // sum_t X_rt^ij X_ts^kl = delta_jk X_rs^il
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              QPoly p;
              for (std::size_t t = 0; t < n; ++t) p.add_term({X(r, t, i, j), X(t, s, k, l)}, Scalar(1));
              if (delta(j, k)) p.add_term({X(r, s, i, l)}, Scalar(-1));
              out.families[0].push_back(std::move(p));
            }
  // sum_{t,p} F_tp X_kl^it X_rs^pj = F_lr X_ks^ij
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              QPoly p;
              for (std::size_t t = 0; t < n; ++t)
                for (std::size_t q = 0; q < n; ++q)
                  if (!F(t, q).is_zero()) p.add_term({X(k, l, i, t), X(r, s, q, j)}, F(t, q));
              if (!F(l, r).is_zero()) p.add_term({X(k, s, i, j)}, -F(l, r));
              out.families[1].push_back(std::move(p));
            }
  // sum_t X_ij^tt = delta_ij
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly p;
      for (std::size_t t = 0; t < n; ++t) p.add_term({X(i, j, t, t)}, Scalar(1));
      if (delta(i, j)) p.add_term({}, Scalar(-1));
      out.families[2].push_back(std::move(p));
    }
  // sum_{t,p} (F^-1)_tp X_tp^ij = (F^-1)_ij
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly p;
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t q = 0; q < n; ++q)
          if (!Finv(t, q).is_zero()) p.add_term({X(t, q, i, j)}, Finv(t, q));
      p.add_term({}, -Finv(i, j));
      out.families[3].push_back(std::move(p));
    }
  return out;
}

}  // namespace cosov::presentations
