#pragma once

#include "cosov/presentations/builders.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace cosov::presentations {

/// Images of alpha, ..., delta* in k[z, z^-1] * O(SL_q(2)), keyed by name.
using PiImages = std::map<std::string, QPoly>;

inline PiImages pi_images(const PresentationSpec& freeprod) {
  const auto& al = freeprod.alphabet();
  const Scalar& q = *freeprod.q;
  const Generator z = al.at("z"), zi = al.at("zinv");
  const Generator a = al.at("a"), b = al.at("b"), c = al.at("c"), d = al.at("d");
  return {
      {"alpha", QPoly({z, a})},          {"beta", QPoly({z, b})},
      {"gamma", QPoly({z, c})},          {"delta", QPoly({z, d})},
      {"alpha*", QPoly({d, zi})},        {"beta*", QPoly({c, zi}, -q.inverse())},
      {"gamma*", QPoly({b, zi}, -q)},    {"delta*", QPoly({a, zi})},
  };
}

struct PiCheck {
  std::string relation;  // "lhs -> rhs" in H(q)
  QPoly residual;        // normal form of pi(lhs - rhs)
};

struct PiReport {
  std::vector<PiCheck> checks;
  bool ok = true;
};

/// Pushes every H(q) relation through the given images and reduces the
/// difference in the free product; all residuals vanish iff the images define
/// an algebra morphism.
inline PiReport verify_pi(const Scalar& q, const PiImages& images) {
  const PresentationSpec hq = build_hq(q);
  const PresentationSpec fp = build_freeprod(q);
  const auto& hal = hq.alphabet();
  std::vector<QPoly> image(hal.size());
  for (std::size_t g = 0; g < hal.size(); ++g) {
    auto it = images.find(hal.name(static_cast<Generator>(g)));
    if (it == images.end()) throw DomainError("no image given for '" + hal.name(static_cast<Generator>(g)) + "'");
    image[g] = it->second;
  }
  auto push = [&](const QPoly& p) {
    QPoly out;
    for (const auto& [m, c] : p.terms()) {
      QPoly t = QPoly::constant(c);
      for (Generator g : m.letters()) t = t * image[g];
      out += t;
    }
    return out;
  };
  PiReport report;
  for (const auto& rule : hq.system.rules()) {
    QPoly diff = push(QPoly(rule.lhs)) - push(rule.rhs);
    PiCheck check{rule.lhs.to_string(hal) + " -> " + rule.rhs.to_string(hal), fp.system.reduce(std::move(diff))};
    report.ok = report.ok && check.residual.is_zero();
    report.checks.push_back(std::move(check));
  }
  return report;
}

inline PiReport verify_pi(const Scalar& q) { return verify_pi(q, pi_images(build_freeprod(q))); }

inline std::string format_pi_report(const PiReport& r) {
  const diamond::Alphabet al({"zinv", "z", "b", "c", "a", "d"});
  std::string out;
  for (const auto& c : r.checks) out += c.relation + "  residual " + c.residual.to_string(al) + "\n";
  out += std::to_string(r.checks.size()) + " relations: " + (r.ok ? "all residuals zero" : "NONZERO residual") + "\n";
  return out;
}

inline nlohmann::json pi_report_to_json(const PiReport& r) {
  const diamond::Alphabet al({"zinv", "z", "b", "c", "a", "d"});
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : r.checks)
    list.push_back({{"relation", c.relation}, {"residual", c.residual.to_string(al)}, {"zero", c.residual.is_zero()}});
  return {{"ok", r.ok}, {"relations", list}};
}

}  // namespace cosov::presentations
