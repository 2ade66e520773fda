#pragma once

#include "cosov/freeprod/rep_ring.hpp"
#include "cosov/fusion/fusion.hpp"
#include "cosov/fusion/word.hpp"

#include <cstddef>
#include <vector>

namespace cosov::freeprod {

/// Character of the fundamental comodule U = Z (x) V_1.
inline RepElement psi_alpha() { return RepElement(AltWord({AltFactor::z(1), AltFactor::v(1)})); }
/// Character of the fundamental comodule V = V_1 (x) Z^-1.
inline RepElement psi_beta() { return RepElement(AltWord({AltFactor::v(1), AltFactor::z(-1)})); }

/// Value on x of the ring morphism from the odot-ring sending alpha, beta to
/// the characters of Z (x) V_1 and V_1 (x) Z^-1. Since
/// alpha (.) y = alpha y + [y starts with beta] y', we peel letters off the
/// left: psi(alpha y) = psi(alpha) psi(y) - [y starts with beta] psi(y').
inline RepElement psi(const fusion::Word& x) {
  const std::size_t len = x.size();
  const RepElement gen_a = psi_alpha();
  const RepElement gen_b = psi_beta();
  std::vector<RepElement> suffix(len + 2);
  suffix[len] = RepElement::trivial();
  for (std::size_t i = len; i-- > 0;) {
    RepElement r = multiply(x[i] == 'a' ? gen_a : gen_b, suffix[i + 1]);
    if (i + 1 < len && x[i + 1] != x[i]) r -= suffix[i + 2];
    suffix[i] = std::move(r);
  }
  return suffix[0];
}

/// Linear extension to fusion-ring elements.
inline RepElement psi(const fusion::FusionElement& u) {
  RepElement out;
  for (const auto& [w, m] : u.terms()) {
    const RepElement image = psi(w);
    for (const auto& [a, k] : image.terms()) out.add(a, m * k);
  }
  return out;
}

}  // namespace cosov::freeprod
