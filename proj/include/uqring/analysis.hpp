#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uqring/ring.hpp"

namespace uqring {

/// Units with their two-sided inverses (inverse[a] is meaningful only for
/// members).
struct UnitGroup {
  Subset set;
  std::vector<Index> inverse;
};

/// Tail and period of the power sequence a, a^2, a^3, ...: a^(tail+1) is
/// the first element that repeats, with period `period`.
struct PowerCycle {
  std::size_t tail = 0;
  std::size_t period = 0;
  Index entry = 0;  // a^(tail+1)
};
PowerCycle power_cycle(const FiniteRing& ring, Index a);

UnitGroup units(const FiniteRing& ring);
Subset idempotents(const FiniteRing& ring);
Subset nilpotents(const FiniteRing& ring);
/// {a : 1 - ra is a unit for every r}.
Subset jacobson_radical(const FiniteRing& ring, const Subset& units);
Subset jacobson_radical(const FiniteRing& ring);
/// {a : 1 - ax is a unit for every x commuting with a}.
Subset quasinilpotents(const FiniteRing& ring, const Subset& units);
Subset quasinilpotents(const FiniteRing& ring);
/// Baer chain of sums of nilpotent ideals. Throws SizeCapExceeded above
/// caps.nstar.
Subset lower_nilradical(const Ring& ring, const Caps& caps = {});
bool is_2primal(const Ring& ring, const Caps& caps = {});
/// Kernel of the coefficient sum of a group ring; throws NotAGroupRing.
Subset augmentation_ideal(const FiniteRing& ring);

/// 1 + S as a subset.
Subset shift_by_one(const FiniteRing& ring, const Subset& s);

struct RingProfile {
  Ring ring;  // table-backed whenever the source fits the table cap
  UnitGroup units;
  Subset idempotents;
  Subset nilpotents;
  Subset jacobson;
  Subset quasinilpotents;
  Subset center;
  std::optional<Subset> lower_nilradical;

  bool is_UQ = false;
  bool is_UJ = false;
  bool is_UU = false;
  bool is_boolean = false;
  bool is_reduced = false;
  std::optional<bool> is_2primal;
  bool is_local = false;
  bool is_division = false;
  bool is_regular = false;
  bool is_semisimple = false;
  bool is_clean = false;
  bool is_uniquely_clean = false;
  bool is_strongly_clean = false;
  bool is_J_clean = false;
  bool is_dedekind_finite = false;
  // Every finite ring is semiperfect, hence semipotent and potent.
  bool is_semipotent = true;
  bool is_potent = true;

  std::size_t size() const { return ring->size(); }
};

/// Computes every subset and flag. Throws SizeCapExceeded above caps.table.
std::shared_ptr<const RingProfile> classify(const Ring& ring, const Caps& caps = {});

struct ElementPredicates {
  bool clean = false;
  bool strongly_clean = false;
  bool nil_clean = false;
  bool J_clean = false;
  bool quasi_nil_clean = false;
  bool strongly_quasi_nil_clean = false;
  std::size_t clean_decompositions = 0;  // idempotents e with a - e a unit
};
ElementPredicates element_predicates(const RingProfile& profile, Index a);
ElementPredicates element_predicates(const Ring& ring, Index a, const Caps& caps = {});

/// Some x with xax = x, ax = xa and a - ax quasinilpotent.
std::optional<Index> gs_drazin_inverse(const RingProfile& profile, Index a);
std::optional<Index> gs_drazin_inverse(const Ring& ring, Index a, const Caps& caps = {});

struct GeometricSumVerdict {
  std::size_t n = 0;
  Index sum = 0;  // 1 + a + ... + a^n
  bool expect_unit = false;
  bool holds = false;
};
/// f_n = 1 + a + ... + a^n for n = 1..nmax: even n must give a unit, odd n a
/// quasinilpotent. Throws PreconditionFailed unless the ring is UQ and a is
/// a unit.
std::vector<GeometricSumVerdict> geometric_sum_check(const RingProfile& profile, Index a, std::size_t nmax);

/// Shared profiles keyed by ring label; each profile is computed once even
/// under concurrent requests.
class ProfileCache {
 public:
  explicit ProfileCache(Caps caps = {}) : caps_(caps) {}
  std::shared_ptr<const RingProfile> get(const Ring& ring);
  const Caps& caps() const noexcept { return caps_; }

 private:
  struct Entry {
    std::once_flag once;
    std::shared_ptr<const RingProfile> profile;
  };
  Caps caps_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
};

}  // namespace uqring
