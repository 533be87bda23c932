#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uqring/analysis.hpp"
#include "uqring/claims.hpp"
#include "uqring/constructions.hpp"
#include "uqring/errors.hpp"
#include "uqring/expr.hpp"

namespace {

using namespace uqring;
using nlohmann::json;

constexpr std::size_t kPrintCap = 64;
constexpr std::size_t kSearchCap = 16;

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

struct Config {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t table_cap = Caps{}.table;
  std::size_t structure_cap = Caps{}.structure;
  std::size_t nstar_cap = Caps{}.nstar;
  std::size_t axiom_cap = Caps{}.axiom;

  Caps caps() const {
    Caps c;
    c.table = table_cap;
    c.structure = structure_cap;
    c.nstar = nstar_cap;
    c.axiom = axiom_cap;
    c.seed = seed;
    return c;
  }
};

json subset_json(const Subset& s) {
  json j{{"size", s.size()}};
  if (s.size() <= kPrintCap) j["members"] = s.members();
  return j;
}

std::string subset_text(const Subset& s) {
  std::string out = std::to_string(s.size());
  if (s.size() > kPrintCap) return out + " (members elided)";
  out += " {";
  bool first = true;
  for (Index a : s.members()) {
    out += (first ? "" : ", ") + std::to_string(a);
    first = false;
  }
  return out + "}";
}

std::vector<std::pair<std::string, json>> flags(const RingProfile& p) {
  std::vector<std::pair<std::string, json>> out = {
      {"is_UQ", p.is_UQ},
      {"is_UJ", p.is_UJ},
      {"is_UU", p.is_UU},
      {"is_boolean", p.is_boolean},
      {"is_reduced", p.is_reduced},
      {"is_2primal", p.is_2primal ? json(*p.is_2primal) : json("unknown")},
      {"is_local", p.is_local},
      {"is_division", p.is_division},
      {"is_regular", p.is_regular},
      {"is_semisimple", p.is_semisimple},
      {"is_clean", p.is_clean},
      {"is_uniquely_clean", p.is_uniquely_clean},
      {"is_strongly_clean", p.is_strongly_clean},
      {"is_J_clean", p.is_J_clean},
      {"is_dedekind_finite", p.is_dedekind_finite},
      {"is_semipotent", p.is_semipotent},
      {"is_potent", p.is_potent},
  };
  return out;
}

std::vector<std::pair<std::string, const Subset*>> sets(const RingProfile& p) {
  std::vector<std::pair<std::string, const Subset*>> out = {
      {"U", &p.units.set},      {"Id", &p.idempotents},       {"N", &p.nilpotents},
      {"J", &p.jacobson},       {"QN", &p.quasinilpotents},   {"Z", &p.center},
  };
  if (p.lower_nilradical) out.emplace_back("N*", &*p.lower_nilradical);
  return out;
}

void print_profile(const Config& cfg, const RingProfile& p, bool with_sets) {
  if (cfg.format == "json") {
    json j{{"ring", p.ring->label()}, {"size", p.size()}, {"seed", cfg.seed}};
    for (const auto& [name, value] : flags(p)) j["flags"][name] = value;
    if (with_sets) {
      for (const auto& [name, s] : sets(p)) j["sets"][name] = subset_json(*s);
      if (!p.lower_nilradical) j["sets"]["N*"] = "skipped(size)";
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "ring: " << p.ring->label() << "\nsize: " << p.size() << "\nseed: " << cfg.seed << "\n";
  if (with_sets) {
    for (const auto& [name, s] : sets(p)) std::cout << name << ": " << subset_text(*s) << "\n";
    if (!p.lower_nilradical) std::cout << "N*: skipped(size)\n";
  }
  for (const auto& [name, value] : flags(p))
    std::cout << name << "=" << (value.is_boolean() ? (value.get<bool>() ? "true" : "false") : "unknown") << "\n";
}

std::optional<PresentedKind> presented_pair(const FiniteRing& a, const FiniteRing& b) {
  const auto ka = a.provenance().kind, kb = b.provenance().kind;
  if (ka == Construction::APresented && kb == Construction::TMatrix) return PresentedKind::AtoT;
  if (ka == Construction::BPresented && kb == Construction::SMatrix) return PresentedKind::BtoS;
  if (ka == Construction::CPresented && kb == Construction::UMatrix) return PresentedKind::CtoU;
  return std::nullopt;
}

/// The explicit presented-ring map when the pair (in either order) is one of
/// A/Tnm, B/S, C/U over the same base and parameters.
std::optional<VerifiedIsomorphism> explicit_iso(const Ring& a, const Ring& b, const Caps& caps) {
  bool swapped = false;
  auto kind = presented_pair(*a, *b);
  if (!kind) {
    kind = presented_pair(*b, *a);
    swapped = true;
  }
  if (!kind) return std::nullopt;
  const Ring& src = swapped ? b : a;
  const auto& params = src->provenance().params;
  const std::size_t n = params[0], m = params.size() > 1 ? params[1] : 0;
  VerifiedIsomorphism iso = presented_iso(*kind, n, m, src->provenance().parts[0], caps);
  if (iso.source->label() != src->label() || iso.target->label() != (swapped ? a : b)->label()) return std::nullopt;
  if (swapped) {
    std::vector<Index> inverse(iso.map.size());
    for (Index x = 0; x < iso.map.size(); ++x) inverse[iso.map[x]] = x;
    iso.map = std::move(inverse);
    std::swap(iso.source, iso.target);
  }
  return iso;
}

int cmd_iso(const Config& cfg, const std::string& ea, const std::string& eb) {
  const Caps caps = cfg.caps();
  const Ring a = evaluate(ea, caps), b = evaluate(eb, caps);
  json j{{"left", a->label()}, {"right", b->label()}, {"seed", cfg.seed}};
  std::optional<std::vector<Index>> map;
  if (a->size() != b->size()) {
    j["method"] = "size";
  } else if (auto iso = explicit_iso(a, b, caps)) {
    j["method"] = "explicit";
    j["exhaustive"] = iso->exhaustive;
    j["pairs_checked"] = iso->pairs;
    map = iso->map;
  } else {
    if (a->size() > kSearchCap) throw SizeCapExceeded(a->size(), kSearchCap);
    j["method"] = "search";
    map = brute_force_isomorphic(a, b);
  }
  j["isomorphic"] = map.has_value();
  if (map && map->size() <= kPrintCap) j["map"] = *map;
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (!map) {
    std::cout << "not isomorphic (" << j["method"].get<std::string>() << ")\n";
  } else {
    std::cout << "isomorphic (" << j["method"].get<std::string>() << ")\n";
    if (map->size() <= kPrintCap) {
      for (Index x = 0; x < map->size(); ++x) std::cout << "  " << x << " -> " << (*map)[x] << "\n";
    } else {
      std::cout << "  map on " << map->size() << " elements elided\n";
    }
  }
  return 0;
}

struct ClaimsArgs {
  std::vector<std::string> only;
  std::vector<std::string> rings;
  bool literal = false;
  bool strict = false;
  bool timings = false;
  std::string out;
};

int cmd_claims(const Config& cfg, const ClaimsArgs& args) {
  const Caps caps = cfg.caps();
  for (const auto& id : args.only) find_claim(id);
  std::vector<Ring> corpus;
  if (args.rings.empty()) {
    corpus = default_corpus(caps);
  } else {
    for (const auto& e : args.rings) corpus.push_back(evaluate(e, caps));
  }
  RunOptions options;
  options.only = args.only;
  options.literal = args.literal;
  const ClaimReport report = run_claims(corpus, options, caps);
  const json j = to_json(report, args.timings);
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    if (!f) throw InvalidArgument("cannot write '" + args.out + "'");
    f << j.dump(2) << "\n";
  }
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_text(report);
  }
  return has_failures(report, args.strict) ? 1 : 0;
}

int cmd_corpus(const Config& cfg) {
  const auto corpus = default_corpus(cfg.caps());
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& r : corpus) j.push_back({{"ring", r->label()}, {"size", r->size()}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : corpus) std::cout << r->size() << "\t" << r->label() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-ring workbench for UQ, UJ and UU rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("UQRING_FORMAT");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->envname("UQRING_SEED");
  app.add_option("--table-cap", cfg.table_cap, "Largest ring given dense tables")
      ->check(CLI::PositiveNumber)
      ->envname("UQRING_TABLE_CAP");
  app.add_option("--structure-cap", cfg.structure_cap, "Largest ring any constructor builds")
      ->check(CLI::PositiveNumber)
      ->envname("UQRING_STRUCTURE_CAP");
  app.add_option("--nstar-cap", cfg.nstar_cap, "Largest ring whose lower nil-radical is computed")
      ->check(CLI::PositiveNumber)
      ->envname("UQRING_NSTAR_CAP");
  app.add_option("--axiom-cap", cfg.axiom_cap, "Largest ring checked exhaustively for axioms")
      ->check(CLI::PositiveNumber)
      ->envname("UQRING_AXIOM_CAP");

  std::string expr, expr_b, claim_id;
  auto* analyze = app.add_subcommand("analyze", "Print the distinguished subsets and flags of a ring");
  analyze->add_option("expr", expr, "Ring expression")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Print the classifier flags of a ring");
  classify_cmd->add_option("expr", expr, "Ring expression")->required();

  ClaimsArgs claims_args;
  auto* claims = app.add_subcommand("claims", "Run the claims grid");
  claims->add_option("--only", claims_args.only, "Claim ids to run")->delimiter(',');
  claims->add_option("--rings", claims_args.rings, "Ring expressions replacing the default corpus");
  claims->add_flag("--literal", claims_args.literal, "Check the literal disjointness statement");
  claims->add_flag("--strict", claims_args.strict, "Treat flagged cells as failures");
  claims->add_flag("--timings", claims_args.timings, "Include per-cell timings in the report");
  claims->add_option("--out", claims_args.out, "Write the JSON report to this file");

  auto* iso = app.add_subcommand("iso", "Decide whether two rings are isomorphic");
  iso->add_option("left", expr, "Ring expression")->required();
  iso->add_option("right", expr_b, "Ring expression")->required();

  bool list = false;
  auto* corpus = app.add_subcommand("corpus", "Show the default corpus");
  corpus->add_flag("--list", list, "List ring labels and sizes");

  auto* explain_cmd = app.add_subcommand("explain", "Describe a claim");
  explain_cmd->add_option("id", claim_id, "Claim id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (*analyze || *classify_cmd) {
      const auto profile = classify(evaluate(expr, cfg.caps()), cfg.caps());
      print_profile(cfg, *profile, static_cast<bool>(*analyze));
      return 0;
    }
    if (*claims) return cmd_claims(cfg, claims_args);
    if (*iso) return cmd_iso(cfg, expr, expr_b);
    if (*corpus) return cmd_corpus(cfg);
    if (*explain_cmd) {
      std::cout << explain(claim_id);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << one_line(e.what()) << "\n";
    return 2;
  }
  return 0;
}
