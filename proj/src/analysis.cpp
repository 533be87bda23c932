#include "uqring/analysis.hpp"

#include "uqring/constructions.hpp"

namespace uqring {

PowerCycle power_cycle(const FiniteRing& ring, Index a) {
  // Brent's cycle detection on x -> x * a starting at a
  auto step = [&](Index x) { return ring.mul(x, a); };
  std::size_t power = 1, period = 1;
  Index tortoise = a, hare = step(a);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = step(hare);
    ++period;
  }
  tortoise = hare = a;
  for (std::size_t i = 0; i < period; ++i) hare = step(hare);
  std::size_t tail = 0;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++tail;
  }
  return {tail, period, tortoise};
}

UnitGroup units(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  UnitGroup out{Subset(n), std::vector<Index>(n, ring.zero())};
  for (Index a = 0; a < n; ++a) {
    const PowerCycle c = power_cycle(ring, a);
    if (c.tail != 0 || ring.pow(a, c.period) != ring.one()) continue;
    out.set.insert(a);
    out.inverse[a] = ring.pow(a, c.period - 1);
  }
  return out;
}

Subset idempotents(const FiniteRing& ring) {
  Subset out(ring.size());
  for (Index a = 0; a < ring.size(); ++a)
    if (ring.mul(a, a) == a) out.insert(a);
  return out;
}

Subset nilpotents(const FiniteRing& ring) {
  Subset out(ring.size());
  for (Index a = 0; a < ring.size(); ++a) {
    const PowerCycle c = power_cycle(ring, a);
    if (c.period == 1 && c.entry == ring.zero()) out.insert(a);
  }
  return out;
}

Subset jacobson_radical(const FiniteRing& ring, const Subset& units) {
  const std::size_t n = ring.size();
  Subset out(n);
  for (Index a = 0; a < n; ++a) {
    bool member = true;
    for (Index r = 0; r < n && member; ++r) member = units.contains(ring.sub(ring.one(), ring.mul(r, a)));
    if (member) out.insert(a);
  }
  return out;
}

Subset jacobson_radical(const FiniteRing& ring) { return jacobson_radical(ring, units(ring).set); }

Subset quasinilpotents(const FiniteRing& ring, const Subset& units) {
  const std::size_t n = ring.size();
  Subset out(n);
  for (Index a = 0; a < n; ++a) {
    bool member = true;
    for (Index x = 0; x < n && member; ++x) {
      const Index ax = ring.mul(a, x);
      if (ax != ring.mul(x, a)) continue;
      member = units.contains(ring.sub(ring.one(), ax));
    }
    if (member) out.insert(a);
  }
  return out;
}

Subset quasinilpotents(const FiniteRing& ring) { return quasinilpotents(ring, units(ring).set); }

namespace {

bool ideal_is_nilpotent(const FiniteRing& ring, const Subset& ideal, const Subset& nil) {
  for (Index x : ideal.members())
    if (!nil.contains(x)) return false;
  const std::vector<Index> base = additive_generators(ring, ideal);
  Subset power = ideal;
  for (;;) {
    if (power.size() == 1) return true;
    AdditiveSpan next(ring);
    for (Index g : additive_generators(ring, power))
      for (Index h : base) next.join(ring.mul(g, h));
    if (next.set() == power) return false;
    power = next.set();
  }
}

/// Sum of all nilpotent ideals.
Subset nilpotent_ideal_sum(const FiniteRing& ring) {
  const Subset nil = nilpotents(ring);
  AdditiveSpan sum(ring);
  for (Index a : nil.members()) {
    if (sum.set().contains(a)) continue;
    const Index seed[] = {a};
    const Subset ideal = ideal_closure(ring, seed);
    if (!ideal_is_nilpotent(ring, ideal, nil)) continue;
    for (Index g : additive_generators(ring, ideal)) sum.join(g);
  }
  return sum.set();
}

}  // namespace

Subset lower_nilradical(const Ring& ring, const Caps& caps) {
  if (ring->size() > caps.nstar) throw SizeCapExceeded(ring->size(), caps.nstar);
  Ring current = materialize(ring, caps.table);
  const std::size_t n = ring->size();
  std::vector<Index> projection(n);
  for (Index a = 0; a < n; ++a) projection[a] = a;
  for (;;) {
    const Subset step = nilpotent_ideal_sum(*current);
    if (step.size() == 1) break;
    const Ring quotient = quotient_ring(current, step, caps);
    const auto& map = quotient->provenance().map;
    for (auto& p : projection) p = map[p];
    current = quotient;
  }
  Subset out(n);
  for (Index a = 0; a < n; ++a)
    if (projection[a] == current->zero()) out.insert(a);
  return out;
}

bool is_2primal(const Ring& ring, const Caps& caps) {
  return nilpotents(*ring) == lower_nilradical(ring, caps);
}

Subset augmentation_ideal(const FiniteRing& ring) {
  const auto& prov = ring.provenance();
  if (prov.kind != Construction::GroupRing) throw NotAGroupRing();
  const FiniteRing& base = *prov.parts[0];
  Subset out(ring.size());
  for (Index f = 0; f < ring.size(); ++f) {
    Index sum = base.zero();
    for (Index c : ring.digits(f)) sum = base.add(sum, c);
    if (sum == base.zero()) out.insert(f);
  }
  return out;
}

Subset shift_by_one(const FiniteRing& ring, const Subset& s) {
  Subset out(ring.size());
  for (Index a : s.members()) out.insert(ring.add(ring.one(), a));
  return out;
}

std::shared_ptr<const RingProfile> classify(const Ring& source, const Caps& caps) {
  if (source->size() > caps.table) throw SizeCapExceeded(source->size(), caps.table);
  auto p = std::make_shared<RingProfile>();
  p->ring = materialize(source, caps.table);
  const FiniteRing& r = *p->ring;
  const std::size_t n = r.size();

  p->units = units(r);
  p->idempotents = idempotents(r);
  p->nilpotents = nilpotents(r);
  p->jacobson = jacobson_radical(r, p->units.set);
  p->quasinilpotents = quasinilpotents(r, p->units.set);
  p->center = center(r);
  if (n <= caps.nstar) {
    p->lower_nilradical = lower_nilradical(p->ring, caps);
    p->is_2primal = *p->lower_nilradical == p->nilpotents;
  }

  const Subset& u = p->units.set;
  p->is_UQ = u == shift_by_one(r, p->quasinilpotents);
  p->is_UJ = u == shift_by_one(r, p->jacobson);
  p->is_UU = u == shift_by_one(r, p->nilpotents);
  p->is_boolean = p->idempotents.size() == n;
  p->is_reduced = p->nilpotents.size() == 1;
  p->is_division = u.size() == n - 1;
  p->is_semisimple = p->jacobson.size() == 1;

  const Subset nonunits = Subset::full(n).minus(u);
  const auto nu = nonunits.members();
  p->is_local = true;
  for (std::size_t i = 0; i < nu.size() && p->is_local; ++i)
    for (std::size_t j = i; j < nu.size() && p->is_local; ++j) p->is_local = nonunits.contains(r.add(nu[i], nu[j]));

  p->is_regular = true;
  for (Index a = 0; a < n && p->is_regular; ++a) {
    bool found = false;
    for (Index x = 0; x < n && !found; ++x) found = r.mul(r.mul(a, x), a) == a;
    p->is_regular = found;
  }

  p->is_dedekind_finite = true;
  for (Index a = 0; a < n && p->is_dedekind_finite; ++a)
    for (Index b = 0; b < n && p->is_dedekind_finite; ++b)
      if (r.mul(a, b) == r.one()) p->is_dedekind_finite = r.mul(b, a) == r.one();

  p->is_clean = p->is_uniquely_clean = p->is_strongly_clean = p->is_J_clean = true;
  const auto ids = p->idempotents.members();
  for (Index a = 0; a < n; ++a) {
    std::size_t decompositions = 0;
    bool strong = false, jclean = false;
    for (Index e : ids) {
      const Index rest = r.sub(a, e);
      if (u.contains(rest)) {
        ++decompositions;
        strong = strong || r.mul(e, a) == r.mul(a, e);
      }
      jclean = jclean || p->jacobson.contains(rest);
    }
    p->is_clean = p->is_clean && decompositions > 0;
    p->is_uniquely_clean = p->is_uniquely_clean && decompositions == 1;
    p->is_strongly_clean = p->is_strongly_clean && strong;
    p->is_J_clean = p->is_J_clean && jclean;
  }
  return p;
}

ElementPredicates element_predicates(const RingProfile& p, Index a) {
  const FiniteRing& r = *p.ring;
  ElementPredicates out;
  for (Index e : p.idempotents.members()) {
    const Index rest = r.sub(a, e);
    const bool commutes = r.mul(e, a) == r.mul(a, e);
    if (p.units.set.contains(rest)) {
      out.clean = true;
      ++out.clean_decompositions;
      out.strongly_clean = out.strongly_clean || commutes;
    }
    out.nil_clean = out.nil_clean || p.nilpotents.contains(rest);
    out.J_clean = out.J_clean || p.jacobson.contains(rest);
    if (p.quasinilpotents.contains(rest)) {
      out.quasi_nil_clean = true;
      out.strongly_quasi_nil_clean = out.strongly_quasi_nil_clean || commutes;
    }
  }
  return out;
}

ElementPredicates element_predicates(const Ring& ring, Index a, const Caps& caps) {
  return element_predicates(*classify(ring, caps), a);
}

std::optional<Index> gs_drazin_inverse(const RingProfile& p, Index a) {
  const FiniteRing& r = *p.ring;
  for (Index x = 0; x < r.size(); ++x) {
    const Index ax = r.mul(a, x);
    if (ax != r.mul(x, a)) continue;
    if (r.mul(x, ax) != x) continue;
    if (p.quasinilpotents.contains(r.sub(a, ax))) return x;
  }
  return std::nullopt;
}

std::optional<Index> gs_drazin_inverse(const Ring& ring, Index a, const Caps& caps) {
  return gs_drazin_inverse(*classify(ring, caps), a);
}

std::vector<GeometricSumVerdict> geometric_sum_check(const RingProfile& p, Index a, std::size_t nmax) {
  if (!p.is_UQ) throw PreconditionFailed("ring '" + p.ring->label() + "' is not UQ");
  if (!p.units.set.contains(a)) throw PreconditionFailed("element " + std::to_string(a) + " is not a unit");
  const FiniteRing& r = *p.ring;
  std::vector<GeometricSumVerdict> out;
  Index sum = r.one(), power = r.one();
  for (std::size_t k = 1; k <= nmax; ++k) {
    power = r.mul(power, a);
    sum = r.add(sum, power);
    GeometricSumVerdict v{k, sum, k % 2 == 0, false};
    v.holds = v.expect_unit ? p.units.set.contains(sum) : p.quasinilpotents.contains(sum);
    out.push_back(v);
  }
  return out;
}

std::shared_ptr<const RingProfile> ProfileCache::get(const Ring& ring) {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = entries_[ring->label()];
    if (!slot) slot = std::make_shared<Entry>();
    entry = slot;
  }
  std::call_once(entry->once, [&] { entry->profile = classify(ring, caps_); });
  return entry->profile;
}

}  // namespace uqring
