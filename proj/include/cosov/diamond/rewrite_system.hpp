#pragma once

#include "cosov/diamond/alphabet.hpp"
#include "cosov/diamond/monomial.hpp"
#include "cosov/diamond/nc_polynomial.hpp"
#include "cosov/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace cosov::diamond {

/// lhs -> rhs. Every monomial of rhs is strictly smaller than lhs.
template <class Field>
struct Rule {
  Monomial lhs;
  NCPolynomial<Field> rhs;
  std::string label;
};

/// Where a reduction applies inside a monomial.
struct Match {
  std::size_t rule;
  std::size_t position;
};

/// Which occurrence gets rewritten first when several apply to the same monomial.
enum class Strategy {
  leftmost,  // largest lhs, leftmost occurrence, lowest rule index
  rightmost  // rightmost occurrence, highest rule index
};

struct Ambiguity {
  enum class Kind { inclusion, overlap };
  Kind kind;
  std::size_t first;   // rule whose lhs starts the witness (or contains the other)
  std::size_t second;  // rule whose lhs ends the witness (or is contained)
  Monomial witness;
  /// Overlap: length of the shared factor. Inclusion: offset of the second lhs
  /// inside the first.
  std::size_t offset;

  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

inline const char* kind_name(Ambiguity::Kind k) { return k == Ambiguity::Kind::inclusion ? "inclusion" : "overlap"; }

template <class Field>
struct Resolution {
  bool resolved;
  NCPolynomial<Field> first_route;   // normal form along the first rule
  NCPolynomial<Field> second_route;  // normal form along the second rule
  NCPolynomial<Field> residual;      // first_route - second_route
};

template <class Field>
struct ConfluenceReport {
  struct Entry {
    Ambiguity ambiguity;
    Resolution<Field> resolution;
  };
  std::vector<Entry> entries;
  bool confluent = true;

  std::size_t count(Ambiguity::Kind k) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [k](const Entry& e) { return e.ambiguity.kind == k; }));
  }
  std::size_t unresolved() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return !e.resolution.resolved; }));
  }
};

/// Reduction system over a field, with a degree-lexicographic monomial order
/// induced by the alphabet order. Rules are checked for compatibility with the
/// order as they are added, so every reduction sequence terminates.
template <class Field>
class RewriteSystem {
public:
  using Poly = NCPolynomial<Field>;

  RewriteSystem() = default;
  explicit RewriteSystem(Alphabet alphabet) : alphabet_(std::move(alphabet)), by_first_(alphabet_.size()) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule<Field>>& rules() const { return rules_; }

  /// Adds lhs -> rhs and returns its index. Throws DomainError when some rhs
  /// monomial is not strictly below lhs.
  std::size_t add_rule(Monomial lhs, Poly rhs, std::string label = {}) {
    if (lhs.empty()) throw DomainError("rule with empty left-hand side");
    for (Generator g : lhs.letters())
      if (g >= alphabet_.size()) throw DomainError("rule uses a generator outside the alphabet");
    for (const auto& [m, c] : rhs.terms()) {
      for (Generator g : m.letters())
        if (g >= alphabet_.size()) throw DomainError("rule uses a generator outside the alphabet");
      if (!(m < lhs))
        throw DomainError("rule " + lhs.to_string(alphabet_) + " -> " + rhs.to_string(alphabet_) +
                          " is not compatible with the monomial order: " + m.to_string(alphabet_) +
                          " is not smaller than the left-hand side");
    }
    by_first_[lhs[0]].push_back(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs), std::move(label)});
    return rules_.size() - 1;
  }

  std::optional<Match> find_match(const Monomial& m, Strategy s = Strategy::leftmost) const {
    std::optional<Match> best;
    for (std::size_t p = 0; p < m.size(); ++p) {
      for (std::size_t r : by_first_[m[p]]) {
        if (!m.matches_at(rules_[r].lhs, p)) continue;
        if (!best) {
          best = Match{r, p};
          continue;
        }
        if (s == Strategy::leftmost) {
          if (rules_[best->rule].lhs < rules_[r].lhs) best = Match{r, p};
        } else {
          best = Match{r, p};  // later position or later rule wins
        }
      }
    }
    return best;
  }

  bool is_reducible(const Monomial& m) const { return find_match(m).has_value(); }

  /// Normal form: no monomial of the result contains a left-hand side.
  Poly reduce(Poly p, Strategy s = Strategy::leftmost) const {
    auto& terms = p.mutable_terms();
    auto it = terms.begin();
    while (it != terms.end()) {
      auto match = find_match(it->first, s);
      if (!match) {
        ++it;
        continue;
      }
      const Monomial m = it->first;
      const Field c = it->second;
      terms.erase(it);
      const Rule<Field>& rule = rules_[match->rule];
      const Monomial left = m.prefix(match->position);
      const Monomial right = m.slice(match->position + rule.lhs.size(), m.size() - match->position - rule.lhs.size());
      for (const auto& [rm, rc] : rule.rhs.terms()) p.add_term(left * rm * right, c * rc);
      // Everything produced is below m; terms above m are already reduced.
      it = terms.upper_bound(m);
    }
    return p;
  }

  Poly reduce(const Monomial& m, Strategy s = Strategy::leftmost) const { return reduce(Poly(m), s); }

  /// All overlap and inclusion ambiguities: inclusions first, then overlaps,
  /// each ordered by (first rule, second rule, offset). Two distinct rules with
  /// the same left-hand side form one inclusion ambiguity.
  std::vector<Ambiguity> find_ambiguities() const {
    std::vector<Ambiguity> inclusions, overlaps;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Monomial& a = rules_[i].lhs;
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Monomial& b = rules_[j].lhs;
        if (i != j && b.size() <= a.size()) {
          if (a == b) {
            if (i < j) inclusions.push_back({Ambiguity::Kind::inclusion, i, j, a, 0});
          } else {
            for (std::size_t p = 0; p + b.size() <= a.size(); ++p)
              if (a.matches_at(b, p)) inclusions.push_back({Ambiguity::Kind::inclusion, i, j, a, p});
          }
        }
        const std::size_t max_k = std::min(a.size(), b.size());
        for (std::size_t k = 1; k < max_k; ++k)
          if (a.matches_at(b.prefix(k), a.size() - k))
            overlaps.push_back({Ambiguity::Kind::overlap, i, j, a * b.suffix(b.size() - k), k});
      }
    }
    inclusions.insert(inclusions.end(), overlaps.begin(), overlaps.end());
    return inclusions;
  }

  /// Reduces the witness one step along each of the two rules, then fully.
  Resolution<Field> resolve(const Ambiguity& amb, Strategy s = Strategy::leftmost) const {
    const Rule<Field>& r1 = rules_.at(amb.first);
    const Rule<Field>& r2 = rules_.at(amb.second);
    Poly route1, route2;
    if (amb.kind == Ambiguity::Kind::overlap) {
      const Monomial tail = r2.lhs.suffix(r2.lhs.size() - amb.offset);
      const Monomial head = r1.lhs.prefix(r1.lhs.size() - amb.offset);
      route1 = r1.rhs * Poly(tail);
      route2 = Poly(head) * r2.rhs;
    } else {
      const Monomial head = r1.lhs.prefix(amb.offset);
      const Monomial tail = r1.lhs.suffix(r1.lhs.size() - amb.offset - r2.lhs.size());
      route1 = r1.rhs;
      route2 = Poly(head) * r2.rhs * Poly(tail);
    }
    Resolution<Field> res{false, reduce(std::move(route1), s), reduce(std::move(route2), s), {}};
    res.residual = res.first_route - res.second_route;
    res.resolved = res.residual.is_zero();
    return res;
  }

  /// Resolves every ambiguity; with threads > 1 the work is split across
  /// threads but entries keep the find_ambiguities order.
  ConfluenceReport<Field> check_confluence(unsigned threads = 1) const {
    ConfluenceReport<Field> report;
    const auto ambs = find_ambiguities();
    std::vector<std::optional<Resolution<Field>>> results(ambs.size());
    auto work = [&](std::size_t from, std::size_t stride) {
      for (std::size_t k = from; k < ambs.size(); k += stride) results[k] = resolve(ambs[k]);
    };
    if (threads <= 1 || ambs.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }
    for (std::size_t k = 0; k < ambs.size(); ++k) {
      report.confluent = report.confluent && results[k]->resolved;
      report.entries.push_back({ambs[k], std::move(*results[k])});
    }
    return report;
  }

  bool confluent() const { return check_confluence().confluent; }

  /// Monomials of length <= max_len containing no left-hand side, in
  /// increasing order. Throws BoundError past `limit` monomials.
  std::vector<Monomial> reduced_monomials(std::size_t max_len, std::size_t limit = 1000000) const {
    std::vector<Generator> all(alphabet_.size());
    for (std::size_t g = 0; g < all.size(); ++g) all[g] = static_cast<Generator>(g);
    std::vector<Monomial> out;
    out.emplace_back();
    std::vector<Monomial> level{Monomial()};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Monomial> next;
      for (const Monomial& w : level)
        for (Generator g : all) {
          Monomial e = w;
          e.push_back(g);
          if (ends_with_lhs(e)) continue;
          next.push_back(std::move(e));
          if (out.size() + next.size() > limit)
            throw BoundError("reduced monomial enumeration exceeds " + std::to_string(limit) + " monomials");
        }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }

  /// Every monomial of length <= max_len in the given generators is reduced,
  /// so (for a confluent system) these monomials are linearly independent and
  /// the generators span a free subalgebra up to that degree.
  bool is_free_family(const std::vector<Generator>& subset, std::size_t max_len) const {
    if (!confluent()) throw HypothesisError("free-family test needs a confluent system (the reduced-monomial basis is unavailable)");
    return all_reduced(subset, max_len);
  }

  /// Same as is_free_family without re-checking confluence.
  bool all_reduced(const std::vector<Generator>& subset, std::size_t max_len) const {
    std::vector<Monomial> level{Monomial()};
    for (std::size_t len = 1; len <= max_len && !subset.empty(); ++len) {
      std::vector<Monomial> next;
      for (const Monomial& w : level)
        for (Generator g : subset) {
          Monomial e = w;
          e.push_back(g);
          if (ends_with_lhs(e)) return false;
          next.push_back(std::move(e));
        }
      level = std::move(next);
    }
    return true;
  }

private:
  // Only occurrences ending at the last letter matter when w minus its last
  // letter is already reduced.
  bool ends_with_lhs(const Monomial& w) const {
    for (const auto& r : rules_)
      if (r.lhs.size() <= w.size() && w.matches_at(r.lhs, w.size() - r.lhs.size())) return true;
    return false;
  }

  Alphabet alphabet_;
  std::vector<Rule<Field>> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
};

/// Fixed-width text table, one row per ambiguity.
template <class Field>
std::string format_report_text(const RewriteSystem<Field>& sys, const ConfluenceReport<Field>& rep) {
  const Alphabet& al = sys.alphabet();
  std::string out = "kind       rules      witness                    resolved  residual\n";
  for (const auto& e : rep.entries) {
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.resize(w, ' ');
      return s;
    };
    const auto& a = e.ambiguity;
    out += pad(kind_name(a.kind), 11);
    out += pad(std::to_string(a.first) + "," + std::to_string(a.second), 11);
    out += pad(a.witness.to_string(al), 27);
    out += pad(e.resolution.resolved ? "yes" : "no", 10);
    out += e.resolution.residual.to_string(al) + "\n";
  }
  out += std::to_string(rep.count(Ambiguity::Kind::inclusion)) + " inclusion, " +
         std::to_string(rep.count(Ambiguity::Kind::overlap)) + " overlap, " + std::to_string(rep.unresolved()) +
         " unresolved: " + (rep.confluent ? "confluent" : "NOT confluent") + "\n";
  return out;
}

template <class Field>
nlohmann::json report_to_json(const RewriteSystem<Field>& sys, const ConfluenceReport<Field>& rep) {
  const Alphabet& al = sys.alphabet();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    const auto& a = e.ambiguity;
    list.push_back({{"kind", kind_name(a.kind)},
                    {"rules", {a.first, a.second}},
                    {"witness", a.witness.to_string(al)},
                    {"residual", e.resolution.residual.to_string(al)},
                    {"resolved", e.resolution.resolved}});
  }
  return {{"confluent", rep.confluent},
          {"inclusion", rep.count(Ambiguity::Kind::inclusion)},
          {"overlap", rep.count(Ambiguity::Kind::overlap)},
          {"ambiguities", list}};
}

}  // namespace cosov::diamond
