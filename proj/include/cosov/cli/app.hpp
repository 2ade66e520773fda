#pragma once

#include "cosov/diamond/presentation_io.hpp"
#include "cosov/diamond/rewrite_system.hpp"
#include "cosov/errors.hpp"
#include "cosov/exact/matrix_io.hpp"
#include "cosov/exact/similarity.hpp"
#include "cosov/freeprod/psi.hpp"
#include "cosov/freeprod/rep_ring.hpp"
#include "cosov/fusion/fusion.hpp"
#include "cosov/presentations/aaut.hpp"
#include "cosov/presentations/builders.hpp"
#include "cosov/presentations/pi.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cosov::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::vector<std::string> words;
  std::optional<std::int64_t> n;
  std::string format = "text";
  std::optional<std::size_t> max_len;
  std::uint64_t seed = 0;
  bool unchecked = false;
  std::string q = "sym";
  std::string presentation;
  std::string e_path, f_path, file;
  std::string generators;
  std::vector<std::string> images;
  unsigned threads = 1;
  std::size_t samples = 0;

  bool json() const { return format == "json"; }
};

namespace detail {

using nlohmann::json;
using presentations::QPoly;
using presentations::QSystem;
using presentations::Scalar;

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Scalar parse_q(const std::string& text) {
  if (text == "sym") return Scalar::q();
  Scalar q = parse_scalar(text, 1, 1);
  if (!q.is_constant()) throw DomainError("--q takes 'sym' or a rational number");
  return q;
}

struct NamedSystem {
  std::string name;
  QSystem system;
};

inline NamedSystem build_named(const RunConfig& cfg) {
  using namespace presentations;
  const std::string& p = cfg.presentation;
  if (p == "hef") {
    if (cfg.e_path.empty() || cfg.f_path.empty()) throw DomainError("check hef needs --E and --F matrix files");
    auto pres = build_hef(load_matrix(cfg.e_path), load_matrix(cfg.f_path), cfg.unchecked ? Mode::unchecked : Mode::checked);
    return {kind_name(pres.kind), std::move(pres.system)};
  }
  if (p == "file") {
    if (cfg.file.empty()) throw DomainError("presentation 'file' needs --file");
    auto f = diamond::load_presentation(cfg.file);
    return {f.name.empty() ? "FILE" : f.name, std::move(f.system)};
  }
  const Scalar q = parse_q(cfg.q);
  PresentationSpec pres = [&] {
    if (p == "hq") return build_hq(q);
    if (p == "hplus") return build_hplusq(q);
    if (p == "slq2") return build_slq2(q);
    if (p == "freeprod") return build_freeprod(q);
    throw DomainError("unknown presentation '" + p + "' (expected hef, hq, hplus, slq2, freeprod or file)");
  }();
  return {kind_name(pres.kind), std::move(pres.system)};
}

// Random polynomial with small integer coefficients, for strategy spot checks.
inline QPoly random_polynomial(const diamond::Alphabet& al, std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> terms(1, 4), len(0, max_len);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<diamond::Generator> gen(0, static_cast<diamond::Generator>(al.size() - 1));
  QPoly p;
  for (std::size_t k = terms(rng); k > 0; --k) {
    diamond::Monomial m;
    for (std::size_t l = len(rng); l > 0; --l) m.push_back(gen(rng));
    p.add_term(m, Scalar(coef(rng)));
  }
  return p;
}

inline fusion::Word word_arg(const RunConfig& cfg, std::size_t k) { return fusion::Word::parse(cfg.words.at(k)); }

inline void emit(std::ostream& out, const RunConfig& cfg, json j) {
  j["seed"] = cfg.seed;
  out << j.dump(2) << "\n";
}

inline int cmd_fuse(const RunConfig& cfg, std::ostream& out) {
  const auto x = word_arg(cfg, 0), y = word_arg(cfg, 1);
  const fusion::FusionElement prod = fusion::fuse(x, y);
  if (!cfg.n) {
    if (cfg.json()) emit(out, cfg, {{"x", x.to_string()}, {"y", y.to_string()}, {"product", prod.to_json()}});
    else out << prod.to_string() << "\n";
    return kSuccess;
  }
  const std::int64_t n = *cfg.n;
  const Integer dx = fusion::dim(x, n), dy = fusion::dim(y, n);
  Integer total = 0;
  json dims = json::array();
  std::string sum;
  for (auto it = prod.terms().rbegin(); it != prod.terms().rend(); ++it) {
    const Integer d = fusion::dim(it->first, n) * it->second;
    total += d;
    dims.push_back({it->first.to_string(), integer_json(d)});
    sum += (sum.empty() ? "" : " + ") + d.str();
  }
  const bool ok = total == dx * dy;
  if (cfg.json()) {
    emit(out, cfg, {{"x", x.to_string()}, {"y", y.to_string()}, {"n", n}, {"product", prod.to_json()},
                    {"dims", dims}, {"total", integer_json(total)}, {"identity_holds", ok}});
  } else {
    out << prod.to_string() << "\n";
    out << "dims (n = " << n << "): " << sum << " = " << total.str() << (ok ? " = " : " != ") << dx.str() << "*"
        << dy.str() << "\n";
  }
  return ok ? kSuccess : kNegative;
}

inline int cmd_dual(const RunConfig& cfg, std::ostream& out) {
  const auto x = word_arg(cfg, 0);
  if (cfg.json()) emit(out, cfg, {{"word", x.to_string()}, {"dual", fusion::dual(x).to_string()}});
  else out << fusion::dual(x).to_string() << "\n";
  return kSuccess;
}

inline int cmd_dim(const RunConfig& cfg, std::ostream& out) {
  const auto x = word_arg(cfg, 0);
  const std::int64_t n = cfg.n.value_or(2);
  const Integer d = fusion::dim(x, n);
  if (cfg.json()) emit(out, cfg, {{"word", x.to_string()}, {"n", n}, {"dim", integer_json(d)}});
  else out << d.str() << "\n";
  return kSuccess;
}

inline int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  const auto x = word_arg(cfg, 0);
  const freeprod::RepElement r = freeprod::psi(x);
  const Integer d = freeprod::alt_dim(r);
  if (cfg.json()) emit(out, cfg, {{"word", x.to_string()}, {"psi", r.to_json()}, {"dim", integer_json(d)}});
  else out << r.to_string() << " (dim " << d.str() << ")\n";
  return kSuccess;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto table = fusion::fusion_table(cfg.max_len.value_or(2));
  if (cfg.json()) emit(out, cfg, {{"max_len", cfg.max_len.value_or(2)}, {"table", fusion::table_to_json(table)}});
  else out << fusion::format_table_text(table);
  return kSuccess;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const NamedSystem ns = build_named(cfg);
  const auto& sys = ns.system;
  const auto report = sys.check_confluence(cfg.threads);
  // Strategy independence on random input is only meaningful when confluent.
  std::size_t disagreements = 0;
  if (cfg.samples > 0 && report.confluent) {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const QPoly p = random_polynomial(sys.alphabet(), rng, cfg.max_len.value_or(4));
      if (sys.reduce(p, diamond::Strategy::leftmost) != sys.reduce(p, diamond::Strategy::rightmost)) ++disagreements;
    }
  }
  if (cfg.json()) {
    json j = diamond::report_to_json(sys, report);
    j["presentation"] = ns.name;
    j["rules"] = sys.rules().size();
    if (cfg.samples > 0) j["strategy_disagreements"] = disagreements;
    emit(out, cfg, j);
  } else {
    out << "presentation " << ns.name << ": " << sys.alphabet().size() << " generators, " << sys.rules().size()
        << " rules\n";
    out << diamond::format_report_text(sys, report);
    if (cfg.samples > 0 && report.confluent)
      out << "strategy spot check: " << cfg.samples << " random polynomials, seed " << cfg.seed << ", "
          << disagreements << " disagreements\n";
  }
  return report.confluent && disagreements == 0 ? kSuccess : kNegative;
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const NamedSystem ns = build_named(cfg);
  out << diamond::format_presentation(ns.system, ns.name);
  return kSuccess;
}

inline int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const NamedSystem ns = build_named(cfg);
  const auto mons = ns.system.reduced_monomials(cfg.max_len.value_or(3));
  if (cfg.json()) {
    json list = json::array();
    for (const auto& m : mons) list.push_back(m.to_string(ns.system.alphabet()));
    emit(out, cfg, {{"presentation", ns.name}, {"max_len", cfg.max_len.value_or(3)}, {"count", mons.size()},
                    {"monomials", list}});
  } else {
    for (const auto& m : mons) out << m.to_string(ns.system.alphabet()) << "\n";
    out << mons.size() << " reduced monomials of length <= " << cfg.max_len.value_or(3) << "\n";
  }
  return kSuccess;
}

inline int cmd_free_check(const RunConfig& cfg, std::ostream& out) {
  const NamedSystem ns = build_named(cfg);
  std::vector<diamond::Generator> subset;
  std::stringstream ss(cfg.generators);
  for (std::string name; std::getline(ss, name, ',');)
    if (!name.empty()) subset.push_back(ns.system.alphabet().at(name));
  const std::size_t len = cfg.max_len.value_or(4);
  const bool free = ns.system.is_free_family(subset, len);
  if (cfg.json()) emit(out, cfg, {{"presentation", ns.name}, {"generators", cfg.generators}, {"max_len", len}, {"free", free}});
  else out << (free ? "free" : "not free") << " up to length " << len << "\n";
  return free ? kSuccess : kNegative;
}

inline int cmd_iso(const RunConfig& cfg, std::ostream& out) {
  if (cfg.e_path.empty() || cfg.f_path.empty()) throw DomainError("iso needs --E and --F matrix files");
  const auto E = to_rational(load_matrix(cfg.e_path));
  const auto F = to_rational(load_matrix(cfg.f_path));
  const IsoVerdict v = hopf_isomorphic(E, F);
  if (cfg.json()) {
    json j = {{"isomorphic", v.isomorphic}};
    if (v.condition) j["condition"] = describe(*v.condition);
    emit(out, cfg, j);
  } else {
    out << (v.isomorphic ? "isomorphic via " + describe(*v.condition) : std::string("not isomorphic")) << "\n";
  }
  return v.isomorphic ? kSuccess : kNegative;
}

inline int cmd_verify_pi(const RunConfig& cfg, std::ostream& out) {
  const Scalar q = parse_q(cfg.q);
  auto fp = presentations::build_freeprod(q);
  auto images = presentations::pi_images(fp);
  for (const auto& pres : cfg.images) {
    const auto eq = pres.find('=');
    if (eq == std::string::npos) throw DomainError("--image expects name=polynomial");
    const std::string name = pres.substr(0, eq);
    if (!images.count(name)) throw DomainError("no generator named '" + name + "' in H(q)");
    images[name] = diamond::parse_polynomial(pres.substr(eq + 1), fp.alphabet());
  }
  const auto report = presentations::verify_pi(q, images);
  if (cfg.json()) emit(out, cfg, presentations::pi_report_to_json(report));
  else out << presentations::format_pi_report(report);
  return report.ok ? kSuccess : kNegative;
}

inline int cmd_aaut(const RunConfig& cfg, std::ostream& out) {
  const auto F = cfg.f_path.empty() ? presentations::ScalarMatrix{{parse_q(cfg.q).inverse(), 0}, {0, parse_q(cfg.q)}}
                                    : load_matrix(cfg.f_path);
  const auto rel = presentations::build_aaut(F);
  if (cfg.json()) {
    json fams = json::array();
    for (std::size_t k = 0; k < rel.families.size(); ++k) {
      json list = json::array();
      for (const auto& p : rel.families[k]) list.push_back(p.to_string(rel.alphabet));
      fams.push_back({{"family", presentations::aaut_family_name(k)}, {"relations", list}});
    }
    emit(out, cfg, {{"generators", rel.alphabet.size()}, {"families", fams}});
  } else {
    for (std::size_t k = 0; k < rel.families.size(); ++k) {
      out << "# " << presentations::aaut_family_name(k) << " (" << rel.families[k].size() << ")\n";
      for (const auto& p : rel.families[k]) out << p.to_string(rel.alphabet) << " = 0\n";
    }
  }
  return kSuccess;
}

}  // namespace detail

inline int execute(const RunConfig& cfg, std::ostream& out) {
  const std::string& c = cfg.command;
  if (c == "fuse") return detail::cmd_fuse(cfg, out);
  if (c == "dual") return detail::cmd_dual(cfg, out);
  if (c == "dim") return detail::cmd_dim(cfg, out);
  if (c == "psi") return detail::cmd_psi(cfg, out);
  if (c == "table") return detail::cmd_table(cfg, out);
  if (c == "check") return detail::cmd_check(cfg, out);
  if (c == "export") return detail::cmd_export(cfg, out);
  if (c == "basis") return detail::cmd_basis(cfg, out);
  if (c == "free-check") return detail::cmd_free_check(cfg, out);
  if (c == "iso") return detail::cmd_iso(cfg, out);
  if (c == "verify-pi") return detail::cmd_verify_pi(cfg, out);
  if (c == "aaut-relations") return detail::cmd_aaut(cfg, out);
  throw DomainError("unknown command '" + c + "'");
}

/// Parses argv (argv[0] is the program name) and runs the command.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact fusion rules and diamond-lemma checks for H(F)", "cosov"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-len", cfg.max_len, "Length bound");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks (recorded in reports)");
  app.add_flag("--unchecked", cfg.unchecked, "Skip the trace conditions when building H(E,F)");
  app.add_option("--q", cfg.q, "Parameter q: 'sym' or a rational such as 3/2");
  app.add_option("--E", cfg.e_path, "Matrix file for E");
  app.add_option("--F", cfg.f_path, "Matrix file for F");

  auto word_cmd = [&](const char* name, const char* help, std::size_t arity) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("words", cfg.words, "Words over a, b (e is the empty word)")->required()->expected(static_cast<int>(arity));
    return sub;
  };
  word_cmd("fuse", "Decompose U_x (x) U_y", 2)->add_option("-n", cfg.n, "Also check dimensions for this n >= 2");
  word_cmd("dual", "Dual word", 1);
  word_cmd("dim", "Dimension of U_x for a given n", 1)->add_option("-n", cfg.n, "Matrix size n >= 2 (default 2)");
  word_cmd("psi", "Image in the free-product representation ring", 1);
  app.add_subcommand("table", "Fusion table for all words up to --max-len");

  auto pres_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("presentation", cfg.presentation, "hef, hq, hplus, slq2, freeprod or file")->required();
    sub->add_option("--file", cfg.file, "Presentation file (with 'file')");
    return sub;
  };
  auto* check = pres_cmd("check", "Enumerate and resolve all ambiguities");
  check->add_option("--threads", cfg.threads, "Worker threads for the confluence check");
  check->add_option("--samples", cfg.samples, "Random polynomials for a strategy-independence spot check");
  pres_cmd("export", "Print the presentation in file format");
  pres_cmd("basis", "Reduced monomials up to --max-len");
  pres_cmd("free-check", "Whether monomials in the given generators are all reduced")
      ->add_option("--generators", cfg.generators, "Comma-separated generator names");
  app.add_subcommand("iso", "Isomorphism test for H(E), H(F)");
  app.add_subcommand("verify-pi", "Check the embedding of H(q) into the free product")
      ->add_option("--image", cfg.images, "Override an image, e.g. beta=z.c");
  app.add_subcommand("aaut-relations", "Relations of A_aut(M_n, tr_F) (F from --F, or F_q)");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return execute(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cosov::cli
