#include <set>

#include <gtest/gtest.h>

#include "uqring/claims.hpp"
#include "uqring/errors.hpp"
#include "uqring/expr.hpp"

using namespace uqring;

namespace {

std::vector<Ring> small_corpus() {
  std::vector<Ring> out;
  for (const char* e : {"Zmod(8)", "Zmod(6)", "M(2, F2)", "T(2, Zmod(4))", "groupring(F2, C(4))", "trivext(Zmod(6))",
                        "A(2, 2, F2)", "C(3, F2)", "U(3, F2)", "product(F2, Zmod(4))"})
    out.push_back(evaluate(e));
  return out;
}

const ClaimReport& full_report() {
  static const ClaimReport r = run_claims(default_corpus(), {});
  return r;
}

}  // namespace

TEST(Claims, RegistryIsCompleteAndUnique) {
  const auto& reg = claim_registry();
  EXPECT_EQ(reg.size(), 34u);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.quote.empty()) << c.id;
    EXPECT_FALSE(c.formalization.empty()) << c.id;
  }
}

TEST(Claims, Explain) {
  EXPECT_NE(explain("C15").find("power of 2"), std::string::npos);
  EXPECT_NE(explain("C27").find("statement:"), std::string::npos);
  EXPECT_THROW(explain("C00"), UnknownClaim);
  EXPECT_THROW(find_claim("nope"), UnknownClaim);
}

TEST(Claims, DefaultCorpusRespectsCaps) {
  const auto corpus = default_corpus();
  EXPECT_EQ(corpus.size(), 80u);
  for (const auto& r : corpus) EXPECT_LE(r->size(), Caps{}.table);
  Caps small;
  small.table = 64;
  for (const auto& r : default_corpus(small)) EXPECT_LE(r->size(), 64u);
}

TEST(Claims, ReportHasOneCellPerClaimAndRing) {
  const ClaimReport& r = full_report();
  EXPECT_EQ(r.cells.size(), r.corpus.size() * claim_registry().size());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : r.cells) EXPECT_TRUE(seen.insert({c.claim, c.ring}).second);
}

TEST(Claims, DefaultCorpusHasNoFailures) {
  const ClaimReport& r = full_report();
  for (const auto& c : r.cells)
    EXPECT_NE(c.outcome.status, Status::Fail) << c.claim << " on " << c.ring << ": " << c.outcome.witness;
  EXPECT_FALSE(has_failures(r, true));
}

TEST(Claims, EveryClaimPassesSomewhere) {
  std::set<std::string> passing;
  for (const auto& c : full_report().cells)
    if (c.outcome.status == Status::Pass) passing.insert(c.claim);
  for (const auto& c : claim_registry()) EXPECT_TRUE(passing.count(c.id)) << c.id;
}

TEST(Claims, LiteralDisjointnessIsFlaggedAtZero) {
  RunOptions opts;
  opts.only = {"C02"};
  opts.literal = true;
  const auto r = run_claims(small_corpus(), opts);
  for (const auto& c : r.cells) {
    EXPECT_EQ(c.outcome.status, Status::Flagged);
    EXPECT_NE(c.outcome.witness.find("e=0"), std::string::npos);
  }
  EXPECT_FALSE(has_failures(r, false));
  EXPECT_TRUE(has_failures(r, true));
}

TEST(Claims, ApplicabilityGatesChecks) {
  RunOptions opts;
  opts.only = {"C15", "C11"};
  const auto r = run_claims(small_corpus(), opts);
  for (const auto& c : r.cells) {
    const bool zn = c.ring.rfind("Zmod", 0) == 0;
    if (c.claim == "C15") EXPECT_EQ(c.outcome.status, zn ? Status::Pass : Status::Inapplicable) << c.ring;
    if (c.claim == "C11") EXPECT_EQ(c.outcome.status, c.ring == "M(2, F2)" ? Status::Pass : Status::Inapplicable);
  }
}

TEST(Claims, SizeCappedRingsAreSkipped) {
  Caps caps;
  caps.table = 64;
  const auto r = run_claims({evaluate("M(2, Zmod(4))", {})}, {}, caps);
  for (const auto& c : r.cells) EXPECT_EQ(c.outcome.status, Status::Skipped);
  EXPECT_EQ(to_string(Status::Skipped), "skipped(size)");
}

TEST(Claims, ReportsAreDeterministic) {
  const auto a = to_json(run_claims(small_corpus(), {})).dump(2);
  const auto b = to_json(run_claims(small_corpus(), {})).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(corpus_digest(small_corpus()), corpus_digest(small_corpus()));
  EXPECT_NE(corpus_digest(small_corpus()), corpus_digest({evaluate("F2")}));
}

TEST(Claims, JsonShape) {
  RunOptions opts;
  opts.only = {"C01"};
  const auto r = run_claims(small_corpus(), opts);
  const auto j = to_json(r);
  for (const char* key : {"config", "digest", "corpus", "claims", "cells", "summary"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_FALSE(j["cells"][0].contains("millis"));
  EXPECT_TRUE(to_json(r, true)["cells"][0].contains("millis"));
  EXPECT_EQ(j["summary"]["pass"], small_corpus().size());
}
