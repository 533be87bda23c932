// Runs the acceptance criteria with their time limits; one line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "uqring/analysis.hpp"
#include "uqring/claims.hpp"
#include "uqring/expr.hpp"

using namespace uqring;

namespace {

using Failure = std::optional<std::string>;

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Failure()> run;
};

std::string cli_path;
ProfileCache cache;

const Ring& f2() {
  static const Ring r = zmod(2);
  return r;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

const std::vector<Ring>& corpus() {
  static const std::vector<Ring> c = default_corpus();
  return c;
}

const ClaimReport& full_report() {
  static const ClaimReport r = run_claims(corpus(), {});
  return r;
}

Failure expect_uq(const std::string& expr, bool expected) {
  const auto p = cache.get(evaluate(expr));
  if (p->is_UQ != expected) return expr + " has is_UQ=" + (p->is_UQ ? "true" : "false");
  return std::nullopt;
}

Failure zn_criterion() {
  std::vector<std::size_t> ns = {32, 64};
  for (std::size_t n = 2; n <= 16; ++n) ns.push_back(n);
  for (std::size_t n : ns)
    if (classify(zmod(n))->is_UQ != is_power_of_two(n)) return "Z/" + std::to_string(n) + " misclassified";
  return std::nullopt;
}

Failure matrix_rings() {
  for (const char* e : {"M(2, F2)", "M(2, Zmod(4))", "M(2, product(F2, F2))", "M(3, F2)"}) {
    const auto p = cache.get(evaluate(e));
    if (p->is_UQ) return std::string(e) + " is UQ";
    const FiniteRing& r = *p->ring;
    bool witness = false;
    for (Index u : p->units.set.members())
      if (p->units.set.contains(r.sub(u, r.one()))) {
        witness = true;
        break;
      }
    if (!witness) return std::string(e) + " has no unit u with u-1 a unit";
  }
  return std::nullopt;
}

Failure quasinilpotent_not_radical() {
  const Ring m2 = matrix_ring(2, f2());
  const Index a = oracle::matrix(*m2, {1, 1, 1, 1});
  const auto p = classify(m2);
  if (!p->quasinilpotents.contains(a)) return "A is not quasinilpotent";
  if (p->jacobson.contains(a)) return "A lies in J";
  return std::nullopt;
}

Failure transfer_suite() {
  std::vector<std::pair<std::string, bool>> cases;
  for (int n = 1; n <= 4; ++n) cases.push_back({"T(" + std::to_string(n) + ", F2)", true});
  cases.push_back({"T(3, Zmod(4))", true});
  for (const char* base : {"F2", "Zmod(4)", "Zmod(8)", "Zmod(6)"}) {
    const bool uq = std::string(base) != "Zmod(6)";
    cases.push_back({std::string("trivext(") + base + ")", uq});
    cases.push_back({std::string("polyq(") + base + ", 2)", uq});
    cases.push_back({std::string("polyq(") + base + ", 3)", uq});
  }
  cases.push_back({"T(2, Zmod(6))", false});
  for (const auto& [e, uq] : cases)
    if (auto f = expect_uq(e, uq)) return f;
  return std::nullopt;
}

Failure group_rings() {
  for (const char* e : {"groupring(F2, C(2))", "groupring(F2, C(4))", "groupring(F2, prod(C(2), C(2)))",
                        "groupring(F2, Q8)", "groupring(F2, D4)", "groupring(Zmod(4), C(2))"}) {
    if (auto f = expect_uq(e, true)) return f;
    const auto p = cache.get(evaluate(e));
    if (!augmentation_ideal(*p->ring).is_subset_of(p->jacobson)) return std::string("augmentation ideal of ") + e;
  }
  for (const char* e : {"groupring(F2, C(3))", "groupring(F2, prod(C(2), C(3)))"})
    if (auto f = expect_uq(e, false)) return f;
  return std::nullopt;
}

Failure presented_rings() {
  std::vector<Ring> instances;
  for (const auto& [n, m] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}})
    for (PresentedKind kind : {PresentedKind::AtoT, PresentedKind::BtoS}) {
      const auto iso = presented_iso(kind, n, m, f2());
      if (!iso.exhaustive) return iso.source->label() + " not verified exhaustively";
      instances.push_back(iso.source);
    }
  for (std::size_t n : {3u, 4u}) {
    const auto iso = presented_iso(PresentedKind::CtoU, n, 0, f2());
    if (!iso.exhaustive) return iso.source->label() + " not verified exhaustively";
    instances.push_back(iso.source);
  }
  RunOptions opts;
  opts.only = {"C31", "C32", "C33"};
  for (const auto& cell : run_claims(instances, opts).cells)
    if (cell.outcome.status != Status::Pass) return cell.claim + " on " + cell.ring + ": " + to_string(cell.outcome.status);
  return std::nullopt;
}

Failure finite_coincidence() {
  for (const Ring& r : corpus()) {
    const auto p = cache.get(r);
    if (p->is_UQ != p->is_UJ || p->is_UQ != p->is_UU) return r->label() + " breaks UQ = UJ = UU";
  }
  for (const auto& cell : full_report().cells)
    if (cell.claim == "C23" && cell.outcome.status != Status::Pass) return "C23 on " + cell.ring;
  return std::nullopt;
}

Failure element_equivalences() {
  std::size_t uq = 0;
  for (const Ring& r : corpus()) {
    const auto p = cache.get(r);
    if (!p->is_UQ) continue;
    ++uq;
    const FiniteRing& ring = *p->ring;
    for (Index a = 0; a < ring.size(); ++a) {
      const ElementPredicates e = element_predicates(*p, a);
      if (e.clean != e.quasi_nil_clean) return r->label() + ": clean vs quasi nil-clean at " + std::to_string(a);
      if (e.strongly_clean != e.strongly_quasi_nil_clean)
        return r->label() + ": strongly clean vs strongly quasi nil-clean at " + std::to_string(a);
      if (gs_drazin_inverse(*p, a).has_value() != e.strongly_quasi_nil_clean)
        return r->label() + ": gs-Drazin vs strongly quasi nil-clean at " + std::to_string(a);
      if (e.clean && !e.strongly_quasi_nil_clean) return r->label() + ": clean element not strongly quasi nil-clean";
    }
    for (Index u : p->units.set.members())
      for (const auto& v : geometric_sum_check(*p, u, 6))
        if (!v.holds) return r->label() + ": geometric sum n=" + std::to_string(v.n) + " at u=" + std::to_string(u);
  }
  if (uq == 0) return "no UQ rings in the corpus";
  for (const auto& cell : full_report().cells) {
    const bool watched = cell.claim == "C19" || cell.claim == "C20" || cell.claim == "C26" || cell.claim == "C34";
    if (watched && cell.outcome.status == Status::Fail) return cell.claim + " fails on " + cell.ring;
  }
  return std::nullopt;
}

Failure invariant_suite() {
  const std::vector<std::string> ids = {"C01", "C02", "C03", "C05", "C06", "C09", "C12", "C13", "C14"};
  for (const auto& cell : full_report().cells)
    if (std::find(ids.begin(), ids.end(), cell.claim) != ids.end() &&
        (cell.outcome.status == Status::Fail || cell.outcome.status == Status::Flagged))
      return cell.claim + " on " + cell.ring + ": " + cell.outcome.witness;
  RunOptions literal;
  literal.only = {"C02", "C10"};
  literal.literal = true;
  const auto report = run_claims(corpus(), literal);
  for (const auto& cell : report.cells) {
    if (cell.claim == "C02" && (cell.outcome.status != Status::Flagged || cell.outcome.witness.find("e=0") == std::string::npos))
      return "literal C02 not flagged at e=0 on " + cell.ring;
    if (cell.claim == "C10" && cell.outcome.status == Status::Fail) return "C10 reported as a failure on " + cell.ring;
  }
  return std::nullopt;
}

Failure oracle_equivalence() {
  for (const Ring& r : corpus()) {
    if (r->size() > 64) continue;
    const auto p = cache.get(r);
    if (p->quasinilpotents != oracle::quasinilpotents(*p->ring)) return "QN oracle mismatch on " + r->label();
  }
  for (const char* e : {"groupring(F2, Q8)", "groupring(Zmod(4), prod(C(2), C(2)))", "groupring(Zmod(3), C(4))"}) {
    const Ring rg = evaluate(e);
    const Group g = rg->provenance().group;
    const FiniteRing& base = *rg->provenance().parts[0];
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, rg->size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const Index f = static_cast<Index>(pick(rng)), h = static_cast<Index>(pick(rng));
      const auto df = rg->digits(f), dh = rg->digits(h);
      std::vector<Index> want(g->size(), base.zero());
      for (Index x = 0; x < g->size(); ++x)
        for (Index y = 0; y < g->size(); ++y) want[g->op(x, y)] = base.add(want[g->op(x, y)], base.mul(df[x], dh[y]));
      if (rg->digits(rg->mul(f, h)) != want) return std::string("convolution mismatch in ") + e;
    }
  }
  return std::nullopt;
}

Failure determinism() {
  if (cli_path.empty()) return "no CLI path given";
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "uqring_det_a.json", b = dir / "uqring_det_b.json";
  for (const auto& out : {a, b}) {
    const std::string cmd = "\"" + cli_path + "\" --seed 1 claims --out \"" + out.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) return "claims run exited nonzero";
  }
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::string ja = slurp(a), jb = slurp(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  if (ja.empty()) return "empty report";
  if (ja != jb) return "reports differ";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "Z_n criterion", 1, zn_criterion},
      {2, "matrix rings are not UQ", 5, matrix_rings},
      {3, "[[1,1],[1,1]] in QN but not J", 1, quasinilpotent_not_radical},
      {4, "transfer suite", 30, transfer_suite},
      {5, "group rings", 60, group_rings},
      {6, "presented ring isomorphisms", 60, presented_rings},
      {7, "finite coincidence over the corpus", 600, finite_coincidence},
      {8, "element-level equivalences", 600, element_equivalences},
      {9, "invariant suite", 600, invariant_suite},
      {10, "oracle equivalence", 600, oracle_equivalence},
      {11, "determinism", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f && secs > c.limit_seconds) f = "exceeded time limit";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (f ? "FAIL" : "PASS") << "  criterion " << c.number << ": " << c.name << " (" << secs << " s, limit "
         << c.limit_seconds << " s)";
    if (f) line << ": " << *f;
    std::cout << line.str() << std::endl;
    failures += f ? 1 : 0;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
