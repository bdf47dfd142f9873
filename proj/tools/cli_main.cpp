// Command-line front end for the exact-arithmetic library: family
// enumeration, norm evaluation, average generation, domination falsifying,
// tree certificates, and the full verification suite.
//
// Subcommands:
//   schreier check|enumerate|audit
//   averages generate|lemma31
//   norm schreier|baernstein|composite
//   dominate
//   szlenk branches|verify|threshold|witness
//   verify all
//
// Exit codes: 0 = all pass (a negative membership answer still exits 0),
// 1 = a check failed, 2 = usage/config error, 3 = resource budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "baernstein/acceptance.hpp"
#include "baernstein/averages.hpp"
#include "baernstein/config.hpp"
#include "baernstein/errors.hpp"
#include "baernstein/finite_set.hpp"
#include "baernstein/norms.hpp"
#include "baernstein/ordinal.hpp"
#include "baernstein/rational.hpp"
#include "baernstein/report.hpp"
#include "baernstein/schreier.hpp"
#include "baernstein/szlenk.hpp"
#include "baernstein/vector.hpp"

namespace {

using baernstein::AveragePrefix;
using baernstein::CheckReport;
using baernstein::Config;
using baernstein::Exponent;
using baernstein::FiniteSet;
using baernstein::IndexStream;
using baernstein::NormDescriptor;
using baernstein::NormEvaluator;
using baernstein::NormResult;
using baernstein::Ordinal;
using baernstein::Rational;
using baernstein::RationalVector;
using baernstein::SchreierFamily;
using baernstein::TreeCertificate;

// Flags shared by every subcommand: configuration file, output format,
// and overrides layered on top of the file (flags win).
struct GlobalArgs {
  std::string config_path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget_enumeration;
  std::optional<std::int64_t> budget_support;
  std::optional<std::int64_t> budget_composite_support;
  std::optional<std::int64_t> budget_entries;
  std::optional<std::int64_t> budget_coefficients;
  std::optional<std::int64_t> budget_limit_branches;
  std::optional<std::string> tolerance;

  Config effective() const {
    Config c;
    if (!config_path.empty()) {
      std::ifstream probe(config_path);
      if (probe) {
        c = Config::load(config_path);
      } else {
        std::cerr << "config: '" << config_path << "' not found; using defaults\n";
      }
    }
    if (seed) c.seed = *seed;
    if (budget_enumeration) c.limits.enumeration_ceiling = *budget_enumeration;
    if (budget_support) c.limits.support_ceiling = *budget_support;
    if (budget_composite_support)
      c.limits.composite_support_ceiling = *budget_composite_support;
    if (budget_entries) c.limits.entry_budget = *budget_entries;
    if (budget_coefficients) c.limits.coefficient_budget = *budget_coefficients;
    if (budget_limit_branches) c.limits.limit_branch_budget = *budget_limit_branches;
    if (tolerance) {
      c.limits.interval_tolerance = baernstein::rational_from_string(*tolerance);
      if (c.limits.interval_tolerance <= 0)
        throw std::invalid_argument("tolerance must be positive");
    }
    return c;
  }
};

// "--vec" / "--blocks" / "--stream" accept inline JSON or @file.
std::string slurp_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::string path = s.substr(1);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json_arg(const std::string& s, const char* what) {
  try {
    return nlohmann::json::parse(slurp_arg(s));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": bad JSON: " + e.what());
  }
}

IndexStream stream_from_flag(const std::string& flag, bool default_triple) {
  if (flag.empty())
    return IndexStream::geometric({1}, 3, default_triple);
  return IndexStream::from_json(parse_json_arg(flag, "stream"));
}

void emit(const CheckReport& r, const GlobalArgs& g) {
  if (g.json) std::cout << r.to_json().dump(2) << '\n';
}

int finish(const CheckReport& r, const GlobalArgs& g) {
  emit(r, g);
  return r.status == "fail" ? 1 : 0;
}

// ---------------------------------------------------------------------------
// schreier

int cmd_schreier_check(const GlobalArgs& g, const std::string& alpha_s,
                       const std::string& set_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  FiniteSet e = FiniteSet::parse(set_s);
  SchreierFamily fam(a);
  bool m = fam.contains(e);
  CheckReport r;
  r.check = "schreier.check";
  r.status = "info";  // a membership query has no pass/fail verdict
  r.parameters = {{"alpha", a.format()}, {"set", e.format()}};
  r.observe("member", m);
  if (m) r.observe("maximal", fam.is_maximal(e, cfg.limits.maximality_window));
  r.config = cfg.to_json();
  if (!g.json) std::cout << (m ? "true" : "false") << '\n';
  emit(r, g);
  return 0;
}

int cmd_schreier_enumerate(const GlobalArgs& g, const std::string& alpha_s,
                           std::int64_t truncation) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  SchreierFamily fam(a);
  std::vector<FiniteSet> members = fam.members_within(truncation, cfg.limits);
  CheckReport r;
  r.check = "schreier.enumerate";
  r.status = "info";
  r.parameters = {{"alpha", a.format()}, {"truncation", truncation}};
  r.observe("count", static_cast<std::int64_t>(members.size()));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : members) list.push_back(e.format());
  r.observe("members", list);
  r.config = cfg.to_json();
  if (!g.json)
    for (const auto& e : members) std::cout << e.format() << '\n';
  emit(r, g);
  return 0;
}

int cmd_schreier_audit(const GlobalArgs& g, const std::string& alpha_s,
                       std::int64_t truncation) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  SchreierFamily fam(a);
  baernstein::AuditResult res = fam.audit(truncation, cfg.limits);
  CheckReport r;
  r.check = "schreier.audit";
  r.parameters = {{"alpha", a.format()}, {"truncation", truncation}};
  r.observe("members", res.member_count);
  r.observe("hereditary", res.hereditary_ok);
  r.observe("spreading", res.spreading_ok);
  r.observe("successor containment", res.successor_ok);
  r.observe("subset checks", res.hereditary_checks);
  r.observe("spread checks", res.spreading_checks);
  r.observe("exhaustive", res.exhaustive_subsets);
  for (const auto& [m, f] : res.hereditary_failures)
    r.witnesses.push_back({{"member", m.format()}, {"missing subset", f.format()}});
  for (const auto& [m, gset] : res.spreading_failures)
    r.witnesses.push_back({{"member", m.format()}, {"missing spread", gset.format()}});
  for (const auto& m : res.successor_failures)
    r.witnesses.push_back({{"member", m.format()}, {"missing from", "successor family"}});
  r.set_status(res.pass());
  r.config = cfg.to_json();
  if (!g.json)
    std::cout << r.line() << "  (" << res.member_count << " members within "
              << truncation << ")\n";
  return finish(r, g);
}

// ---------------------------------------------------------------------------
// averages

int cmd_averages_generate(const GlobalArgs& g, const std::string& alpha_s,
                          std::int64_t n, const std::string& stream_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  IndexStream stream = stream_from_flag(stream_s, false);
  AveragePrefix prefix = baernstein::generate_averages(a, stream, n, cfg.limits);
  CheckReport r;
  r.check = "averages.generate";
  r.status = "info";
  r.parameters = {{"alpha", a.format()}, {"n", n}, {"stream", stream.to_json()}};
  r.observe("vectors", [&] {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : prefix.vectors) list.push_back(v.to_json());
    return list;
  }());
  r.observe("consumed", prefix.consumed);
  r.config = cfg.to_json();
  if (!g.json)
    for (const auto& v : prefix.vectors) std::cout << v.format() << '\n';
  emit(r, g);
  return 0;
}

int cmd_averages_lemma31(const GlobalArgs& g, const std::string& alpha_s,
                         std::int64_t n_sum, std::int64_t truncation,
                         const std::string& stream_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  IndexStream stream = stream_from_flag(stream_s, true);
  AveragePrefix prefix = baernstein::generate_averages(a, stream, n_sum, cfg.limits);
  baernstein::L1BoundOutcome out =
      baernstein::lemma31_check(prefix, n_sum, truncation, cfg.limits);
  CheckReport r;
  r.check = "averages.lemma31";
  r.parameters = {{"alpha", a.format()},
                  {"n_sum", n_sum},
                  {"truncation", truncation},
                  {"stream", stream.to_json()}};
  r.observe("max l1 mass", baernstein::to_string(out.max_mass));
  r.observe("witness", out.witness.format());
  r.observe("members checked", out.members_checked);
  if (!out.pass)
    r.witnesses.push_back({{"member", out.witness.format()},
                           {"mass", baernstein::to_string(out.max_mass)}});
  r.set_status(out.pass);
  r.config = cfg.to_json();
  if (!g.json)
    std::cout << r.line() << "  max mass " << baernstein::to_string(out.max_mass)
              << " at " << out.witness.format() << '\n';
  return finish(r, g);
}

// ---------------------------------------------------------------------------
// norm

int emit_norm(const GlobalArgs& g, const Config& cfg, const char* name,
              nlohmann::json params, const NormResult& nr) {
  CheckReport r;
  r.check = name;
  r.status = "info";
  r.parameters = std::move(params);
  r.observe("value", baernstein::norm_value_json(nr.value));
  r.observe("witness", baernstein::partition_json(nr.witness));
  r.config = cfg.to_json();
  if (!g.json) {
    std::cout << nr.value.format() << '\n';
    if (!nr.witness.empty()) {
      std::cout << "witness:";
      for (const auto& e : nr.witness) std::cout << ' ' << e.format();
      std::cout << '\n';
    }
  }
  emit(r, g);
  return 0;
}

int cmd_norm_schreier(const GlobalArgs& g, const std::string& alpha_s,
                      const std::string& vec_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  RationalVector x = RationalVector::parse(slurp_arg(vec_s));
  NormEvaluator ev(cfg.limits);
  NormResult nr = ev.schreier_norm(a, x);
  return emit_norm(g, cfg, "norm.schreier",
                   {{"alpha", a.format()}, {"vec", x.to_json()}}, nr);
}

int cmd_norm_baernstein(const GlobalArgs& g, const std::string& alpha_s,
                        const std::string& p_s, const std::string& vec_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  Exponent p = Exponent::parse(p_s);
  RationalVector x = RationalVector::parse(slurp_arg(vec_s));
  NormEvaluator ev(cfg.limits);
  NormResult nr = ev.baernstein_norm(a, p, x);
  return emit_norm(
      g, cfg, "norm.baernstein",
      {{"alpha", a.format()}, {"p", p.format()}, {"vec", x.to_json()}}, nr);
}

int cmd_norm_composite(const GlobalArgs& g, const std::string& inner_s,
                       const std::string& outer_s, const std::string& vec_s) {
  Config cfg = g.effective();
  NormDescriptor inner = NormDescriptor::parse(inner_s);
  NormDescriptor outer = NormDescriptor::parse(outer_s);
  RationalVector x = RationalVector::parse(slurp_arg(vec_s));
  NormEvaluator ev(cfg.limits);
  NormResult nr = ev.composite_norm(inner, outer, x);
  return emit_norm(
      g, cfg, "norm.composite",
      {{"inner", inner_s}, {"outer", outer_s}, {"vec", x.to_json()}}, nr);
}

// ---------------------------------------------------------------------------
// dominate

int cmd_dominate(const GlobalArgs& g, const std::string& blocks_s,
                 const std::string& block_norm_s, const std::string& positions_s,
                 const std::string& reference_norm_s, const std::string& constant_s,
                 const std::string& direction_s) {
  Config cfg = g.effective();
  NormEvaluator ev(cfg.limits);
  NormEvaluator::DominationQuery q;
  nlohmann::json blocks = parse_json_arg(blocks_s, "blocks");
  if (!blocks.is_array() || blocks.empty())
    throw std::invalid_argument("blocks: expected a nonempty JSON array of vectors");
  for (const auto& b : blocks) q.blocks.push_back(RationalVector::from_json(b));
  q.block_norm = NormDescriptor::parse(block_norm_s);
  q.positions = FiniteSet::parse(positions_s).elements();
  q.reference_norm = NormDescriptor::parse(reference_norm_s);
  q.constant = baernstein::rational_from_string(constant_s);
  if (direction_s == "upper") {
    q.direction = NormEvaluator::Direction::upper;
  } else if (direction_s == "lower") {
    q.direction = NormEvaluator::Direction::lower;
  } else {
    throw std::invalid_argument("direction must be 'upper' or 'lower'");
  }
  NormEvaluator::DominationOutcome out = ev.check_domination(q, cfg.seed);
  CheckReport r;
  r.check = "dominate";
  r.parameters = {{"block_norm", block_norm_s},
                  {"positions", positions_s},
                  {"reference_norm", reference_norm_s},
                  {"constant", constant_s},
                  {"direction", direction_s},
                  {"blocks", static_cast<std::int64_t>(q.blocks.size())}};
  r.observe("falsified", out.falsified);
  r.observe("samples", out.samples);
  if (out.max_ratio_power) {
    r.observe("max ratio power", baernstein::to_string(*out.max_ratio_power));
    r.observe("ratio power exponent", static_cast<std::int64_t>(out.ratio_power));
    r.observe("max ratio at", baernstein::coefficients_json(out.max_ratio_at));
  }
  if (out.falsified)
    r.witnesses.push_back({{"coefficients", baernstein::coefficients_json(out.witness)}});
  if (out.indeterminate)
    r.notes.push_back("some comparisons could not be certified at the configured precision");
  r.notes.push_back(
      "falsifier only: 'not falsified' reports the searched samples, it does not prove domination");
  r.set_status(!out.falsified);
  r.config = cfg.to_json();
  if (!g.json)
    std::cout << (out.falsified ? "falsified" : "not falsified") << "  ("
              << out.samples << " samples)\n";
  return finish(r, g);
}

// ---------------------------------------------------------------------------
// szlenk

int cmd_szlenk_branches(const GlobalArgs& g, const std::string& alpha_s,
                        std::int64_t truncation) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  TreeCertificate cert(a, Rational(1), truncation);
  SchreierFamily fam(a);
  std::vector<baernstein::Branch> branches =
      baernstein::enumerate_branches(fam, cert, cfg.limits);
  CheckReport r;
  r.check = "szlenk.branches";
  r.status = "info";
  r.parameters = {{"alpha", a.format()}, {"truncation", truncation}};
  r.observe("count", static_cast<std::int64_t>(branches.size()));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& b : branches)
    list.push_back({{"base", b.base.format()},
                    {"length", static_cast<std::int64_t>(b.chain.size())}});
  r.observe("branches", list);
  r.config = cfg.to_json();
  if (!g.json)
    for (const auto& b : branches) std::cout << b.base.format() << '\n';
  emit(r, g);
  return 0;
}

int cmd_szlenk_verify(const GlobalArgs& g, const std::string& alpha_s,
                      std::int64_t truncation, const std::string& rho_s,
                      const std::string& norm_s) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  Rational rho = baernstein::rational_from_string(rho_s);
  TreeCertificate cert(a, rho, truncation);
  NormDescriptor norm = norm_s.empty()
                            ? NormDescriptor::make_baernstein(a, Exponent::integer(2))
                            : NormDescriptor::parse(norm_s);
  NormEvaluator ev(cfg.limits);
  baernstein::BranchCheckOutcome out = baernstein::verify_branch_lower(ev, cert, norm, cfg.seed);
  CheckReport r;
  r.check = "szlenk.verify";
  r.parameters = {{"alpha", a.format()},
                  {"truncation", truncation},
                  {"rho", rho_s},
                  {"norm", norm.format()}};
  r.observe("branches", out.branches);
  r.observe("samples", out.samples);
  r.observe("exact equalities", out.equalities);
  if (!out.pass)
    r.witnesses.push_back(
        {{"base", out.failed_base ? out.failed_base->format() : "?"},
         {"kind", out.failure_kind},
         {"coefficients", baernstein::coefficients_json(out.failed_coeffs)}});
  r.set_status(out.pass);
  r.config = cfg.to_json();
  if (!g.json)
    std::cout << r.line() << "  (" << out.branches << " branches, " << out.samples
              << " samples)\n";
  return finish(r, g);
}

int cmd_szlenk_threshold(const GlobalArgs& g, const std::string& rho_s,
                         const std::string& p_s) {
  Config cfg = g.effective();
  Rational rho = baernstein::rational_from_string(rho_s);
  Exponent p = Exponent::parse(p_s);
  baernstein::BigInt t = baernstein::threshold_index(rho, p);
  CheckReport r;
  r.check = "szlenk.threshold";
  r.status = "info";
  r.parameters = {{"rho", rho_s}, {"p", p.format()}};
  r.observe("threshold", t.get_str());
  r.observe("holds at threshold", baernstein::threshold_holds(t, rho, p));
  if (t > 1)
    r.observe("holds below threshold", baernstein::threshold_holds(t - 1, rho, p));
  r.config = cfg.to_json();
  if (!g.json) std::cout << t.get_str() << '\n';
  emit(r, g);
  return 0;
}

int cmd_szlenk_witness(const GlobalArgs& g, const std::string& alpha_s,
                       const std::string& p_s, std::int64_t i1) {
  Config cfg = g.effective();
  Ordinal a = Ordinal::parse(alpha_s);
  Exponent p = Exponent::parse(p_s);
  NormEvaluator ev(cfg.limits);
  baernstein::WitnessOutcome out = baernstein::prop42_witness(ev, a, p, i1);
  CheckReport r;
  r.check = "szlenk.witness";
  r.parameters = {{"alpha", a.format()}, {"p", p.format()}, {"i1", i1}};
  r.observe("base", out.base.format());
  r.observe("base size", static_cast<std::int64_t>(out.base.size()));
  r.observe("consumed", out.consumed);
  r.observe("mass", baernstein::to_string(out.mass));
  r.observe("mass equals i1", out.mass_ok);
  r.observe("supports tile base", out.support_ok);
  r.observe("norm", baernstein::norm_value_json(out.norm));
  r.observe("bound", baernstein::norm_value_json(out.bound));
  r.observe("norm within bound", out.norm_ok);
  if (!out.norm_witness.empty())
    r.observe("norm witness", baernstein::partition_json(out.norm_witness));
  r.set_status(out.pass());
  r.config = cfg.to_json();
  if (!g.json)
    std::cout << r.line() << "  mass " << baernstein::to_string(out.mass) << ", norm "
              << out.norm.format() << " <= " << out.bound.format() << '\n';
  return finish(r, g);
}

// ---------------------------------------------------------------------------
// verify all

int cmd_verify_all(const GlobalArgs& g, int only_check) {
  Config cfg = g.effective();
  baernstein::acceptance::Harness h(cfg);
  std::vector<CheckReport> reports;
  if (only_check > 0) {
    reports.push_back(h.run(only_check));
  } else {
    reports = h.run_all();
  }
  bool all_pass = true;
  int passed = 0;
  for (const auto& r : reports) {
    bool ok = r.status == "pass";
    all_pass = all_pass && ok;
    passed += ok ? 1 : 0;
    if (!g.json)
      std::cout << r.line() << "  (" << r.runtime_ms << " ms)\n";
  }
  if (g.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << passed << "/" << reports.size() << " checks passed\n";
  }
  return all_pass ? 0 : 1;
}

void report_error(bool json, const char* kind, const std::string& message) {
  if (json) {
    nlohmann::json j = {{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}};
    std::cout << j.dump(2) << '\n';
  }
  std::cerr << "error: " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorics of Schreier families, repeated averages, "
      "blocked norms, and branch certificates"};
  app.require_subcommand(1);

  GlobalArgs g;
  app.add_option("--config", g.config_path,
                 "JSON configuration file (missing file means defaults)");
  app.add_flag("--json", g.json, "emit machine-readable JSON reports");
  app.add_option("--seed", g.seed, "falsifier / sampler seed");
  app.add_option("--budget-enumeration", g.budget_enumeration,
                 "largest truncation for member enumeration");
  app.add_option("--budget-support", g.budget_support,
                 "largest support size for norm evaluation");
  app.add_option("--budget-composite-support", g.budget_composite_support,
                 "largest support size for blocked norms");
  app.add_option("--budget-entries", g.budget_entries,
                 "coefficient entries per generation run");
  app.add_option("--budget-coefficients", g.budget_coefficients,
                 "sampled coefficient vectors per search");
  app.add_option("--budget-limit-branches", g.budget_limit_branches,
                 "indices tried at limit-ordinal stages");
  app.add_option("--tolerance", g.tolerance,
                 "certified interval width goal (rational literal)");

  int rc = 0;

  auto* schreier = app.add_subcommand("schreier", "Schreier family queries");
  schreier->require_subcommand(1);
  schreier->fallthrough();
  {
    auto* check = schreier->add_subcommand("check", "membership of a finite set");
    check->fallthrough();
    auto alpha = std::make_shared<std::string>();
    auto set = std::make_shared<std::string>();
    check->add_option("--alpha", *alpha, "ordinal literal, e.g. 'w*2+1'")->required();
    check->add_option("--set", *set, "finite set, e.g. '{2,3,7}'")->required();
    check->callback([&rc, &g, alpha, set] { rc = cmd_schreier_check(g, *alpha, *set); });

    auto* enumerate = schreier->add_subcommand("enumerate", "members within {1..N}");
    enumerate->fallthrough();
    auto ea = std::make_shared<std::string>();
    auto en = std::make_shared<std::int64_t>(0);
    enumerate->add_option("--alpha", *ea, "ordinal literal")->required();
    enumerate->add_option("--truncation", *en, "largest element N")->required();
    enumerate->callback([&rc, &g, ea, en] { rc = cmd_schreier_enumerate(g, *ea, *en); });

    auto* audit = schreier->add_subcommand("audit", "hereditary/spreading audit");
    audit->fallthrough();
    auto aa = std::make_shared<std::string>();
    auto an = std::make_shared<std::int64_t>(8);
    audit->add_option("--alpha", *aa, "ordinal literal")->required();
    audit->add_option("--truncation", *an, "audit window {1..N} (default 8)");
    audit->callback([&rc, &g, aa, an] { rc = cmd_schreier_audit(g, *aa, *an); });
  }

  auto* averages = app.add_subcommand("averages", "repeated-averages hierarchy");
  averages->require_subcommand(1);
  averages->fallthrough();
  {
    auto* gen = averages->add_subcommand("generate", "first N average vectors");
    gen->fallthrough();
    auto ga = std::make_shared<std::string>();
    auto gn = std::make_shared<std::int64_t>(1);
    auto gs = std::make_shared<std::string>();
    gen->add_option("--alpha", *ga, "ordinal literal")->required();
    gen->add_option("--n", *gn, "how many vectors (default 1)");
    gen->add_option("--stream", *gs,
                    "index stream JSON or @file, e.g. "
                    "'{\"prefix\":[1,3,9],\"rule\":\"geometric\",\"ratio\":3}'");
    gen->callback([&rc, &g, ga, gn, gs] { rc = cmd_averages_generate(g, *ga, *gn, *gs); });

    auto* l31 = averages->add_subcommand(
        "lemma31", "exhaustive l1 bound over enumerated members");
    l31->fallthrough();
    auto la = std::make_shared<std::string>();
    auto ln = std::make_shared<std::int64_t>(1);
    auto lt = std::make_shared<std::int64_t>(0);
    auto ls = std::make_shared<std::string>();
    l31->add_option("--alpha", *la, "ordinal literal")->required();
    l31->add_option("--n-sum", *ln, "how many averages to sum (default 1)");
    l31->add_option("--truncation", *lt, "member enumeration window {1..N}")->required();
    l31->add_option("--stream", *ls,
                    "index stream JSON or @file; must carry \"triple_growth\": true");
    l31->callback(
        [&rc, &g, la, ln, lt, ls] { rc = cmd_averages_lemma31(g, *la, *ln, *lt, *ls); });
  }

  auto* norm = app.add_subcommand("norm", "exact norm evaluation");
  norm->require_subcommand(1);
  norm->fallthrough();
  {
    auto* ns = norm->add_subcommand("schreier", "sup of member-set masses");
    ns->fallthrough();
    auto sa = std::make_shared<std::string>();
    auto sv = std::make_shared<std::string>();
    ns->add_option("--alpha", *sa, "ordinal literal")->required();
    ns->add_option("--vec", *sv, "vector JSON or @file")->required();
    ns->callback([&rc, &g, sa, sv] { rc = cmd_norm_schreier(g, *sa, *sv); });

    auto* nb = norm->add_subcommand("baernstein", "blocked l_p norm");
    nb->fallthrough();
    auto ba = std::make_shared<std::string>();
    auto bp = std::make_shared<std::string>(std::string("2"));
    auto bv = std::make_shared<std::string>();
    nb->add_option("--alpha", *ba, "ordinal literal")->required();
    nb->add_option("--p", *bp, "exponent: rational >= 1 or 'inf' (default 2)");
    nb->add_option("--vec", *bv, "vector JSON or @file")->required();
    nb->callback([&rc, &g, ba, bp, bv] { rc = cmd_norm_baernstein(g, *ba, *bp, *bv); });

    auto* nc = norm->add_subcommand("composite", "interval-blocked composite norm");
    nc->fallthrough();
    auto ci = std::make_shared<std::string>();
    auto co = std::make_shared<std::string>();
    auto cv = std::make_shared<std::string>();
    nc->add_option("--inner", *ci, "descriptor: 'lp:2' | 'schreier:w' | 'baernstein:w:2'")
        ->required();
    nc->add_option("--outer", *co, "descriptor for the outer aggregation")->required();
    nc->add_option("--vec", *cv, "vector JSON or @file")->required();
    nc->callback([&rc, &g, ci, co, cv] { rc = cmd_norm_composite(g, *ci, *co, *cv); });
  }

  {
    auto* dom = app.add_subcommand(
        "dominate", "search for a violation of C-domination (falsifier)");
    dom->fallthrough();
    auto blocks = std::make_shared<std::string>();
    auto bnorm = std::make_shared<std::string>();
    auto pos = std::make_shared<std::string>();
    auto rnorm = std::make_shared<std::string>();
    auto cst = std::make_shared<std::string>(std::string("1"));
    auto dir = std::make_shared<std::string>(std::string("upper"));
    dom->add_option("--blocks", *blocks, "JSON array of vectors or @file")->required();
    dom->add_option("--block-norm", *bnorm, "descriptor for the block sum")->required();
    dom->add_option("--positions", *pos, "reference positions, e.g. '{1,3,9}'")->required();
    dom->add_option("--reference-norm", *rnorm, "descriptor for the reference sum")
        ->required();
    dom->add_option("--constant", *cst, "domination constant C (default 1)");
    dom->add_option("--direction", *dir, "'upper' (sum <= C*ref) or 'lower' (ref <= C*sum)");
    dom->callback([&rc, &g, blocks, bnorm, pos, rnorm, cst, dir] {
      rc = cmd_dominate(g, *blocks, *bnorm, *pos, *rnorm, *cst, *dir);
    });
  }

  auto* szlenk = app.add_subcommand("szlenk", "branch certificates and thresholds");
  szlenk->require_subcommand(1);
  szlenk->fallthrough();
  {
    auto* br = szlenk->add_subcommand("branches", "maximal chains within {1..N}");
    br->fallthrough();
    auto ba = std::make_shared<std::string>();
    auto bn = std::make_shared<std::int64_t>(6);
    br->add_option("--alpha", *ba, "ordinal literal")->required();
    br->add_option("--truncation", *bn, "largest element N (default 6)");
    br->callback([&rc, &g, ba, bn] { rc = cmd_szlenk_branches(g, *ba, *bn); });

    auto* ve = szlenk->add_subcommand("verify", "branch lower-bound identity");
    ve->fallthrough();
    auto va = std::make_shared<std::string>();
    auto vn = std::make_shared<std::int64_t>(6);
    auto vr = std::make_shared<std::string>(std::string("1"));
    auto vd = std::make_shared<std::string>();
    ve->add_option("--alpha", *va, "ordinal literal")->required();
    ve->add_option("--truncation", *vn, "largest element N (default 6)");
    ve->add_option("--rho", *vr, "lower-bound factor in (0,1] (default 1)");
    ve->add_option("--norm", *vd, "descriptor (default 'baernstein:<alpha>:2')");
    ve->callback(
        [&rc, &g, va, vn, vr, vd] { rc = cmd_szlenk_verify(g, *va, *vn, *vr, *vd); });

    auto* th = szlenk->add_subcommand("threshold", "least index beating 80/rho");
    th->fallthrough();
    auto tr = std::make_shared<std::string>();
    auto tp = std::make_shared<std::string>();
    th->add_option("--rho", *tr, "slicing parameter in (0,1]")->required();
    th->add_option("--p", *tp, "exponent: rational > 1 or 'inf'")->required();
    th->callback([&rc, &g, tr, tp] { rc = cmd_szlenk_threshold(g, *tr, *tp); });

    auto* wi = szlenk->add_subcommand("witness", "explicit mass/norm witness set");
    wi->fallthrough();
    auto wa = std::make_shared<std::string>();
    auto wp = std::make_shared<std::string>(std::string("2"));
    auto wn = std::make_shared<std::int64_t>(2);
    wi->add_option("--alpha", *wa, "ordinal literal")->required();
    wi->add_option("--p", *wp, "exponent (default 2)");
    wi->add_option("--i1", *wn, "first stream index (default 2)");
    wi->callback([&rc, &g, wa, wp, wn] { rc = cmd_szlenk_witness(g, *wa, *wp, *wn); });
  }

  {
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* all = verify->add_subcommand("all", "run the full acceptance suite");
    all->fallthrough();
    auto only = std::make_shared<int>(0);
    all->add_option("--check", *only, "run a single criterion (1-11)")
        ->check(CLI::Range(1, 11));
    all->callback([&rc, &g, only] { rc = cmd_verify_all(g, *only); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const baernstein::budget_error& e) {
    report_error(g.json, "budget", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    report_error(g.json, "usage", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error(g.json, "internal", e.what());
    return 2;
  }
  return rc;
}
