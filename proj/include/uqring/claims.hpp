#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uqring/analysis.hpp"

namespace uqring {

enum class Status { Pass, Fail, Flagged, Inapplicable, Skipped };
std::string to_string(Status s);

struct Outcome {
  Status status = Status::Pass;
  std::string witness;  // set for fail and flagged
  std::string note;
};

struct ClaimContext {
  Ring ring;
  const RingProfile& profile;
  ProfileCache& cache;
  const Caps& caps;
  bool literal = false;
};

enum class CostClass { Cheap, Quadratic, Cubic };

struct Claim {
  std::string id;
  std::string title;
  std::string quote;
  std::string formalization;
  std::string applicability;
  CostClass cost = CostClass::Cheap;
  std::function<bool(const ClaimContext&)> applies;
  std::function<Outcome(const ClaimContext&)> check;
};

const std::vector<Claim>& claim_registry();
/// Throws UnknownClaim.
const Claim& find_claim(const std::string& id);
std::string explain(const std::string& id);

/// The curated corpus; rings above caps.table are left out.
std::vector<Ring> default_corpus(const Caps& caps = {});

struct Cell {
  std::string claim;
  std::string ring;
  Outcome outcome;
  double millis = 0;
};

struct ClaimReport {
  Caps caps;
  bool literal = false;
  std::vector<std::pair<std::string, std::size_t>> corpus;
  std::vector<std::string> claims;
  std::vector<Cell> cells;
  std::string digest;
};

struct RunOptions {
  std::vector<std::string> only;  // empty runs the whole registry
  bool literal = false;           // test the literal disjointness statement
};

ClaimReport run_claims(const std::vector<Ring>& corpus, const RunOptions& options, const Caps& caps = {});

/// FNV-1a over labels and operation tables, as 16 hex digits.
std::string corpus_digest(const std::vector<Ring>& corpus);

/// Keys are sorted and timings are left out unless requested, so equal runs
/// serialize byte-identically.
nlohmann::json to_json(const ClaimReport& report, bool timings = false);
std::string to_text(const ClaimReport& report);

/// True if some cell failed, or (when strict) was flagged.
bool has_failures(const ClaimReport& report, bool strict = false);

}  // namespace uqring
