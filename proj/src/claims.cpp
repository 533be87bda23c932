#include "uqring/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "uqring/constructions.hpp"

namespace uqring {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Flagged:
      return "flagged";
    case Status::Inapplicable:
      return "inapplicable";
    case Status::Skipped:
      return "skipped(size)";
  }
  return "?";
}

namespace {

std::string str(Index a) { return std::to_string(a); }

Outcome ok(std::string note = {}) { return {Status::Pass, {}, std::move(note)}; }
Outcome bad(std::string witness) { return {Status::Fail, std::move(witness), {}}; }
Outcome na(std::string note) { return {Status::Inapplicable, {}, std::move(note)}; }

bool always(const ClaimContext&) { return true; }
bool uq_only(const ClaimContext& c) { return c.profile.is_UQ; }
Construction kind_of(const ClaimContext& c) { return c.profile.ring->provenance().kind; }

bool is_family(Construction k) {
  return k == Construction::APresented || k == Construction::BPresented || k == Construction::CPresented ||
         k == Construction::TMatrix || k == Construction::SMatrix || k == Construction::UMatrix;
}

std::shared_ptr<const RingProfile> base_profile(const ClaimContext& c, std::size_t part = 0) {
  return c.cache.get(c.profile.ring->provenance().parts.at(part));
}

/// Profile of R/J(R); R itself when J(R) = 0.
std::shared_ptr<const RingProfile> radical_quotient(const ClaimContext& c) {
  if (c.profile.jacobson.size() == 1) return c.cache.get(c.profile.ring);
  return c.cache.get(quotient_ring(c.profile.ring, c.profile.jacobson, c.caps));
}

std::string yn(bool b) { return b ? "true" : "false"; }

/// First index where the listed flags disagree, formatted as a witness.
Outcome all_equal(const std::vector<std::pair<std::string, bool>>& flags) {
  for (const auto& f : flags)
    if (f.second != flags.front().second) {
      std::string w;
      for (const auto& g : flags) w += (w.empty() ? "" : ", ") + g.first + "=" + yn(g.second);
      return bad(w);
    }
  return ok("all " + yn(flags.front().second));
}

Outcome check_subset(const Subset& inner, const Subset& outer, const std::string& inner_name,
                     const std::string& outer_name) {
  const long w = inner.first_outside(outer);
  if (w >= 0) return bad("a=" + std::to_string(w) + " in " + inner_name + " but not in " + outer_name);
  return ok();
}


// C01
Outcome containments(const ClaimContext& c) {
  const auto& p = c.profile;
  if (auto o = check_subset(p.nilpotents, p.quasinilpotents, "N(R)", "QN(R)"); o.status != Status::Pass) return o;
  return check_subset(p.jacobson, p.quasinilpotents, "J(R)", "QN(R)");
}

// C02
Outcome disjointness(const ClaimContext& c) {
  const auto& p = c.profile;
  const Subset both = p.quasinilpotents.intersect(p.units.set);
  if (!both.empty()) return bad("a=" + str(both.members()[0]) + " in QN(R) and U(R)");
  Subset nonzero_ids = p.idempotents;
  nonzero_ids.erase(p.ring->zero());
  const Subset hit = p.quasinilpotents.intersect(nonzero_ids);
  if (!hit.empty()) return bad("e=" + str(hit.members()[0]) + " is a nonzero idempotent in QN(R)");
  if (c.literal) {
    const Subset literal = p.quasinilpotents.intersect(p.idempotents);
    if (!literal.empty())
      return {Status::Flagged, "e=" + str(literal.members()[0]) + " lies in QN(R) and Id(R)",
              "literal statement fails only at the zero idempotent"};
  }
  return ok();
}

// C03: every subset computed componentwise
Outcome product_factorization(const ClaimContext& c) {
  const auto& p = c.profile;
  const auto& parts = p.ring->provenance().parts;
  std::vector<std::shared_ptr<const RingProfile>> fp;
  for (const auto& part : parts) fp.push_back(c.cache.get(part));
  struct Pick {
    const char* name;
    const Subset& (*get)(const RingProfile&);
  };
  const Pick picks[] = {
      {"QN", [](const RingProfile& q) -> const Subset& { return q.quasinilpotents; }},
      {"U", [](const RingProfile& q) -> const Subset& { return q.units.set; }},
      {"Id", [](const RingProfile& q) -> const Subset& { return q.idempotents; }},
      {"N", [](const RingProfile& q) -> const Subset& { return q.nilpotents; }},
      {"J", [](const RingProfile& q) -> const Subset& { return q.jacobson; }},
  };
  for (Index x = 0; x < p.size(); ++x) {
    const auto d = p.ring->digits(x);
    for (const auto& pick : picks) {
      bool expected = true;
      for (std::size_t i = 0; i < d.size(); ++i) expected = expected && pick.get(*fp[i]).contains(d[i]);
      if (pick.get(p).contains(x) != expected)
        return bad(std::string(pick.name) + " differs from the componentwise set at a=" + str(x));
    }
  }
  return ok();
}

// C04
Outcome product_uq(const ClaimContext& c) {
  bool all = true;
  for (const auto& part : c.profile.ring->provenance().parts) all = all && c.cache.get(part)->is_UQ;
  if (c.profile.is_UQ != all) return bad("is_UQ(R)=" + yn(c.profile.is_UQ) + " but all factors UQ=" + yn(all));
  return ok();
}

// C05: corner law for every nonzero idempotent, and UQ passes to corners
Outcome corners(const ClaimContext& c) {
  const auto& p = c.profile;
  std::size_t checked = 0;
  for (Index e : p.idempotents.members()) {
    if (e == p.ring->zero()) continue;
    const CornerRing cr = corner(p.ring, e, c.caps);
    const FiniteRing& s = *cr.ring;
    const UnitGroup su = units(s);
    const Subset sq = quasinilpotents(s, su.set);
    for (Index x = 0; x < s.size(); ++x)
      if (sq.contains(x) != p.quasinilpotents.contains(cr.embedding.map[x]))
        return bad("e=" + str(e) + ": element " + str(cr.embedding.map[x]) + " of eRe has QN(eRe)=" +
                   yn(sq.contains(x)) + " but QN(R)=" + yn(!sq.contains(x)));
    if (p.is_UQ && su.set != shift_by_one(s, sq)) return bad("e=" + str(e) + ": R is UQ but eRe is not");
    ++checked;
  }
  return ok(std::to_string(checked) + " corners");
}

// C06
Outcome good_subrings(const ClaimContext& c) {
  const auto embeddings = registered_embeddings(c.profile.ring, c.caps);
  std::size_t good = 0;
  for (const auto& named : embeddings) {
    const auto& e = named.embedding;
    const auto sub = c.cache.get(e.sub);
    const auto sup = e.sup->label() == c.profile.ring->label() ? c.cache.get(c.profile.ring) : c.cache.get(e.sup);
    bool is_good = true;
    for (Index x = 0; x < e.sub->size() && is_good; ++x)
      is_good = sub->units.set.contains(x) == sup->units.set.contains(e.map[x]);
    if (!is_good) continue;
    ++good;
    for (Index x = 0; x < e.sub->size(); ++x)
      if (sup->quasinilpotents.contains(e.map[x]) && !sub->quasinilpotents.contains(x))
        return bad(named.name + ": s=" + str(x) + " lies in QN(R) but not in QN(S)");
    if (sup->is_UQ && !sub->is_UQ) return bad(named.name + ": R is UQ but the good subring S is not");
  }
  if (good == 0) return na("no good subring registered");
  return ok(std::to_string(good) + " good subrings");
}

bool structured_kind(const ClaimContext& c) {
  const auto k = kind_of(c);
  return k == Construction::TrivialExtension || k == Construction::FormalTriangular ||
         k == Construction::UpperTriangular || k == Construction::PolyQuotient;
}

// C07: the predicted QN set is contained in QN, with equality over UQ bases
Outcome structured_qn(const ClaimContext& c) {
  const auto& p = c.profile;
  const auto& prov = p.ring->provenance();
  const auto base = base_profile(c);
  bool equality_expected = base->is_UQ;
  std::function<bool(Index)> predicted;
  switch (prov.kind) {
    case Construction::TrivialExtension:
    case Construction::PolyQuotient:
      predicted = [&](Index x) { return base->quasinilpotents.contains(p.ring->digits(x)[0]); };
      break;
    case Construction::FormalTriangular: {
      const auto right = base_profile(c, 1);
      equality_expected = equality_expected && right->is_UQ;
      predicted = [&, right](Index x) {
        const auto d = p.ring->digits(x);
        return base->quasinilpotents.contains(d[0]) && right->quasinilpotents.contains(d[2]);
      };
      break;
    }
    default: {
      const std::size_t n = prov.params[0];
      predicted = [&, n](Index x) {
        for (std::size_t i = 0; i < n; ++i)
          if (!base->quasinilpotents.contains(matrix_entry(*p.ring, x, i, i))) return false;
        return true;
      };
    }
  }
  for (Index x = 0; x < p.size(); ++x) {
    const bool pred = predicted(x), actual = p.quasinilpotents.contains(x);
    if (pred && !actual) return bad("a=" + str(x) + " has its base components in QN but is not in QN(R)");
    if (equality_expected && actual && !pred)
      return bad("a=" + str(x) + " is in QN(R) but outside the predicted set over a UQ base");
  }
  return ok(equality_expected ? "equality" : "inclusion");
}

// C08
Outcome transfer(const ClaimContext& c) {
  bool base_uq = base_profile(c)->is_UQ;
  if (kind_of(c) == Construction::FormalTriangular) base_uq = base_uq && base_profile(c, 1)->is_UQ;
  if (c.profile.is_UQ != base_uq) return bad("is_UQ(R)=" + yn(c.profile.is_UQ) + ", base UQ=" + yn(base_uq));
  return ok();
}

bool is_m2_f2(const FiniteRing& r) {
  const auto& prov = r.provenance();
  return prov.kind == Construction::Matrix && prov.params[0] == 2 && prov.parts[0]->size() == 2;
}

// C09
Outcome central_closure(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  const auto qn = p.quasinilpotents.members();
  for (Index b : p.center.members())
    for (Index a : qn) {
      if (!p.quasinilpotents.contains(r.mul(a, b)))
        return bad("a=" + str(a) + " in QN(R), b=" + str(b) + " central, ab not in QN(R)");
      if (p.quasinilpotents.contains(b) && !p.quasinilpotents.contains(r.add(a, b)))
        return bad("a=" + str(a) + ", b=" + str(b) + " central in QN(R), a+b not in QN(R)");
    }
  if (is_m2_f2(r)) {
    // a = e12, b = e21 are quasinilpotent but ab and a+b are not
    const std::vector<Index> e12{0, 1, 0, 0}, e21{0, 0, 1, 0};
    const Index a = r.encode(e12), b = r.encode(e21);
    const bool shown = p.quasinilpotents.contains(a) && p.quasinilpotents.contains(b) &&
                       !p.quasinilpotents.contains(r.mul(a, b)) && !p.quasinilpotents.contains(r.add(a, b));
    if (!shown) return bad("non-central example e12, e21 does not behave as stated");
    return ok("non-central example e12, e21 confirmed");
  }
  return ok();
}

// C10
Outcome unit_sum_characterization(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  const Subset central_units = p.units.set.intersect(p.center);
  Subset sums(r.size());
  for (Index u : p.units.set.members())
    for (Index v : central_units.members()) sums.insert(r.add(u, v));
  const bool equal = sums == p.quasinilpotents;
  if (equal == p.is_UQ) return ok();
  long w = sums.first_outside(p.quasinilpotents);
  if (w < 0) w = p.quasinilpotents.first_outside(sums);
  return {Status::Flagged, "is_UQ=" + yn(p.is_UQ) + " but U+(U∩Z)=QN is " + yn(equal) + " (a=" + std::to_string(w) + ")",
          "literal equality disagrees with the UQ property"};
}

// C11
Outcome matrix_not_uq(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  const auto& prov = r.provenance();
  const std::size_t n = prov.params[0];
  const FiniteRing& base = *prov.parts[0];
  if (p.is_UQ) return bad("M_n(S) classified as UQ");
  // U = [[0,1],[1,1]] and e - U are units of the corner e M_n(S) e, e = e11 + e22
  std::vector<Index> d(n * n, base.zero());
  d[0] = d[n + 1] = base.one();
  const Index e = r.encode(d);
  d[0] = base.zero();
  d[1] = d[n] = base.one();
  const Index u = r.encode(d);
  const CornerRing cr = corner(p.ring, e, c.caps);
  const auto& map = cr.embedding.map;
  const auto at = [&](Index x) { return static_cast<Index>(std::find(map.begin(), map.end(), x) - map.begin()); };
  const UnitGroup cu = units(*cr.ring);
  if (!cu.set.contains(at(u)) || !cu.set.contains(at(r.sub(e, u))))
    return bad("U=[[0,1],[1,1]] or I-U is not a unit of the 2x2 corner");
  for (Index v : p.units.set.members())
    if (p.units.set.contains(r.sub(v, r.one()))) return ok("u=" + str(v) + " and u-1 are both units");
  return bad("no unit u with u-1 a unit");
}

// C12
Outcome ab_ba(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b) {
      const bool x = p.quasinilpotents.contains(r.sub(r.one(), r.mul(a, b)));
      const bool y = p.quasinilpotents.contains(r.sub(r.one(), r.mul(b, a)));
      if (x != y) return bad("a=" + str(a) + ", b=" + str(b) + ": 1-ab in QN is " + yn(x) + ", 1-ba in QN is " + yn(y));
    }
  return ok();
}

Outcome no_two_units_sum_to_one(const RingProfile& p, const std::string& where) {
  const FiniteRing& r = *p.ring;
  for (Index u : p.units.set.members()) {
    const Index v = r.sub(r.one(), u);
    if (p.units.set.contains(v)) return bad(where + ": units " + str(u) + " + " + str(v) + " = 1");
  }
  return ok();
}

// C13
Outcome unit_sums(const ClaimContext& c) {
  if (auto o = no_two_units_sum_to_one(c.profile, "R"); o.status != Status::Pass) return o;
  return no_two_units_sum_to_one(*radical_quotient(c), "R/J(R)");
}

// C14
Outcome two_and_squares(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  const Index two = r.integer(2);
  if (!p.quasinilpotents.contains(two)) return bad("2 not in QN(R)");
  if (!p.jacobson.contains(two)) return bad("2 not in J(R)");
  for (Index x = 0; x < r.size(); ++x)
    if (p.quasinilpotents.contains(x) != p.quasinilpotents.contains(r.mul(x, x)))
      return bad("x=" + str(x) + ": x in QN is " + yn(p.quasinilpotents.contains(x)));
  const auto qn = p.quasinilpotents.members();
  bool additive = true, subring = true;
  for (Index a : qn) {
    subring = subring && p.quasinilpotents.contains(r.neg(a));
    for (Index b : qn) {
      additive = additive && p.quasinilpotents.contains(r.add(a, b));
      subring = subring && p.quasinilpotents.contains(r.mul(a, b));
    }
  }
  subring = subring && additive;
  if (additive != subring) return bad("QN additively closed=" + yn(additive) + ", QN subring=" + yn(subring));
  return ok(additive ? "QN(R) is a subring" : "QN(R) is not additively closed");
}

// C15
Outcome zn_criterion(const ClaimContext& c) {
  const std::size_t n = c.profile.size();
  const bool power_of_two = (n & (n - 1)) == 0;
  if (c.profile.is_UQ != power_of_two)
    return bad("n=" + std::to_string(n) + ": is_UQ=" + yn(c.profile.is_UQ));
  return ok();
}

// C16
Outcome uq_structure(const ClaimContext& c) {
  const auto& p = c.profile;
  if (p.is_UQ) {
    if (p.is_division && p.size() != 2) return bad("UQ division ring with " + std::to_string(p.size()) + " elements");
    if (p.is_local && p.size() != 2 * p.jacobson.size()) return bad("UQ local ring with |R/J(R)| != 2");
    if (p.is_semisimple && !p.is_boolean) return bad("UQ semisimple ring that is not Boolean");
  }
  if (p.is_local && p.is_UQ != p.is_uniquely_clean)
    return bad("local ring: is_UQ=" + yn(p.is_UQ) + ", uniquely clean=" + yn(p.is_uniquely_clean));
  return ok();
}

bool uq_or_local(const ClaimContext& c) { return c.profile.is_UQ || c.profile.is_local; }

// C17
Outcome semipotent_equivalences(const ClaimContext& c) {
  const auto& p = c.profile;
  const auto q = radical_quotient(c);
  return all_equal({{"(1) R/J UQ", q->is_UQ},
                    {"(2) R/J Boolean", q->is_boolean},
                    {"(3) R UJ", p.is_UJ},
                    {"(4) R/J UU", q->is_UU},
                    {"(5) R UQ and QN=J", p.is_UQ && p.quasinilpotents == p.jacobson}});
}

// C18
Outcome regular_rings(const ClaimContext& c) {
  const auto& p = c.profile;
  return all_equal({{"UQ", p.is_UQ}, {"UJ", p.is_UJ}, {"UU", p.is_UU}, {"Boolean", p.is_boolean}});
}

// C19
Outcome clean_vs_qnc(const ClaimContext& c) {
  for (Index a = 0; a < c.profile.size(); ++a) {
    const auto e = element_predicates(c.profile, a);
    if (e.clean != e.quasi_nil_clean) return bad("a=" + str(a) + ": clean=" + yn(e.clean) + ", quasi nil-clean=" + yn(e.quasi_nil_clean));
    if (e.strongly_clean != e.strongly_quasi_nil_clean)
      return bad("a=" + str(a) + ": strongly clean=" + yn(e.strongly_clean) +
                 ", strongly quasi nil-clean=" + yn(e.strongly_quasi_nil_clean));
  }
  return ok();
}

// C20
Outcome uq_three_way(const ClaimContext& c) {
  const auto& p = c.profile;
  const FiniteRing& r = *p.ring;
  bool clean_are_sqnc = true;
  for (Index a = 0; a < r.size() && clean_are_sqnc; ++a) {
    const auto e = element_predicates(p, a);
    clean_are_sqnc = !e.clean || e.strongly_quasi_nil_clean;
  }
  const Subset central_ids = p.idempotents.intersect(p.center);
  bool units_split = true;
  for (Index u : p.units.set.members()) {
    bool found = false;
    for (Index e : central_ids.members()) found = found || p.quasinilpotents.contains(r.sub(u, e));
    units_split = units_split && found;
  }
  return all_equal({{"(1) UQ", p.is_UQ}, {"(2) clean elements strongly quasi nil-clean", clean_are_sqnc},
                    {"(3) units are central idempotent + QN", units_split}});
}

bool sqnc_ring(const RingProfile& p) {
  for (Index a = 0; a < p.size(); ++a)
    if (!element_predicates(p, a).strongly_quasi_nil_clean) return false;
  return true;
}

// C21
Outcome sqnc_rings(const ClaimContext& c) {
  const auto& p = c.profile;
  const bool sqnc = sqnc_ring(p);
  if (sqnc && !p.is_UQ) return bad("strongly quasi nil-clean ring that is not UQ");
  if (sqnc && !p.is_strongly_clean) return bad("strongly quasi nil-clean ring that is not strongly clean");
  return all_equal({{"strongly quasi nil-clean", sqnc}, {"UQ and strongly clean", p.is_UQ && p.is_strongly_clean}});
}

// C22
Outcome potent_equivalences(const ClaimContext& c) {
  const auto& p = c.profile;
  const auto q = radical_quotient(c);
  return all_equal({{"(1) UQ", p.is_UQ},
                    {"(2) R/J UQ", q->is_UQ},
                    {"(3) R/J Boolean", q->is_boolean},
                    {"(4) UJ", p.is_UJ},
                    {"(5) R/J UJ", q->is_UJ},
                    {"(6) R/J UU", q->is_UU}});
}

// C23
Outcome finite_coincidence(const ClaimContext& c) {
  const auto& p = c.profile;
  return all_equal({{"UQ", p.is_UQ}, {"UJ", p.is_UJ}, {"UU", p.is_UU}});
}

// C24
Outcome potent_j_clean(const ClaimContext& c) {
  return all_equal({{"potent UQ", c.profile.is_UQ}, {"J-clean", c.profile.is_J_clean}});
}

// C25
Outcome radical_lifting(const ClaimContext& c) {
  const auto& p = c.profile;
  std::vector<Subset> ideals{p.jacobson};
  const auto gens = ideal_generators(*p.ring, p.jacobson);
  if (gens.size() > 1) {
    const Index seed[] = {gens[0]};
    ideals.push_back(ideal_closure(*p.ring, seed));
  }
  for (const auto& ideal : ideals) {
    const Ring quotient = quotient_ring(p.ring, ideal, c.caps);
    const auto q = c.cache.get(quotient);
    const auto& proj = quotient->provenance().map;
    for (Index x = 0; x < p.size(); ++x)
      if (q->quasinilpotents.contains(proj[x]) && !p.quasinilpotents.contains(x))
        return bad("I=" + quotient->label() + ": x=" + str(x) + " maps into QN(R/I) but is not in QN(R)");
    if (q->is_UQ && !p.is_UQ) return bad(quotient->label() + " is UQ but R is not");
  }
  return ok(std::to_string(ideals.size()) + " ideals inside J(R)");
}

bool nonzero_radical(const ClaimContext& c) { return c.profile.jacobson.size() > 1; }

// C26
Outcome geometric_sums(const ClaimContext& c) {
  for (Index a : c.profile.units.set.members())
    for (const auto& v : geometric_sum_check(c.profile, a, 6))
      if (!v.holds)
        return bad("a=" + str(a) + ", n=" + std::to_string(v.n) + ": f_n=" + str(v.sum) + " not in " +
                   (v.expect_unit ? "U(R)" : "QN(R)"));
  return ok();
}

bool group_ring_kind(const ClaimContext& c) { return kind_of(c) == Construction::GroupRing; }
bool two_group(const ClaimContext& c) { return c.profile.ring->provenance().group->is_2_group(); }

// C27
Outcome group_necessity(const ClaimContext& c) {
  const bool g2 = two_group(c);
  const bool base_uq = base_profile(c)->is_UQ;
  if (!g2 && c.profile.is_UQ) return bad("G is not a 2-group but RG is UQ");
  if (c.profile.is_UQ && !base_uq) return bad("RG is UQ but R is not");
  return ok();
}

// C28
Outcome group_sufficiency(const ClaimContext& c) {
  if (!c.profile.is_UQ) return bad("R is UQ and G a 2-group but RG is not UQ");
  return ok();
}
bool uq_base_two_group(const ClaimContext& c) {
  return group_ring_kind(c) && two_group(c) && base_profile(c)->is_UQ;
}

// C29
Outcome group_uj(const ClaimContext& c) {
  if (!c.profile.is_UJ) return bad("R is UJ and G a 2-group but RG is not UJ");
  return ok();
}

// C30
Outcome augmentation(const ClaimContext& c) {
  const Subset delta = augmentation_ideal(*c.profile.ring);
  return check_subset(delta, c.profile.jacobson, "Δ(RG)", "J(RG)");
}

PresentedKind family_iso(Construction k) {
  switch (k) {
    case Construction::APresented:
    case Construction::TMatrix:
      return PresentedKind::AtoT;
    case Construction::BPresented:
    case Construction::SMatrix:
      return PresentedKind::BtoS;
    default:
      return PresentedKind::CtoU;
  }
}

bool family(const ClaimContext& c) { return is_family(kind_of(c)); }

// C31
Outcome presented_isos(const ClaimContext& c) {
  const auto& prov = c.profile.ring->provenance();
  const std::size_t m = prov.params.size() > 1 ? prov.params[1] : 0;
  try {
    const auto v = presented_iso(family_iso(prov.kind), prov.params[0], m, prov.parts[0], c.caps);
    return ok(v.source->label() + " -> " + v.target->label() + (v.exhaustive ? " exhaustive, " : " sampled, ") +
              std::to_string(v.pairs) + " pairs");
  } catch (const VerificationFailed& e) {
    return bad(e.what());
  }
}

// C32
Outcome unit_shapes(const ClaimContext& c) {
  const auto& p = c.profile;
  const auto base = base_profile(c);
  for (Index x = 0; x < p.size(); ++x) {
    const bool predicted = base->units.set.contains(p.ring->digits(x)[0]);
    if (predicted != p.units.set.contains(x))
      return bad("a=" + str(x) + ": constant term unit=" + yn(predicted) + ", a unit=" + yn(!predicted));
  }
  return ok();
}

// C33
Outcome family_transfer(const ClaimContext& c) {
  const bool base_uq = base_profile(c)->is_UQ;
  if (c.profile.is_UQ != base_uq) return bad("is_UQ(R)=" + yn(c.profile.is_UQ) + ", base UQ=" + yn(base_uq));
  return ok();
}

/// Checks that the matrix images realize `pattern` exactly: equal labels
/// share an entry, distinct labels vary independently, label 0 is zero.
std::string pattern_mismatch(const FiniteRing& target, const std::vector<std::vector<int>>& pattern) {
  const std::size_t n = pattern.size();
  if (matrix_dimension(target) != n) return "matrix size differs";
  const Index zero = target.provenance().parts[0]->zero();
  std::vector<bool> differ(n * n * n * n, false);
  for (Index x = 0; x < target.size(); ++x)
    for (std::size_t i = 0; i < n * n; ++i) {
      const Index ei = matrix_entry(target, x, i / n, i % n);
      if (pattern[i / n][i % n] == 0 && ei != zero) return "entry (" + std::to_string(i / n) + "," + std::to_string(i % n) + ") is not zero";
      for (std::size_t j = 0; j < n * n; ++j)
        if (ei != matrix_entry(target, x, j / n, j % n)) differ[i * n * n + j] = true;
    }
  for (std::size_t i = 0; i < n * n; ++i)
    for (std::size_t j = 0; j < n * n; ++j) {
      const int li = pattern[i / n][i % n], lj = pattern[j / n][j % n];
      if (li == 0 || lj == 0) continue;
      if ((li == lj) == differ[i * n * n + j]) return "entries " + std::to_string(i) + " and " + std::to_string(j) + " are not tied as displayed";
    }
  return {};
}

// C34
Outcome shapes_and_gs_drazin(const ClaimContext& c) {
  const auto& p = c.profile;
  for (Index a = 0; a < p.size(); ++a) {
    const bool gs = gs_drazin_inverse(p, a).has_value();
    const bool sqnc = element_predicates(p, a).strongly_quasi_nil_clean;
    if (gs != sqnc) return bad("a=" + str(a) + ": gs-Drazin invertible=" + yn(gs) + ", strongly quasi nil-clean=" + yn(sqnc));
  }
  const auto& prov = p.ring->provenance();
  std::vector<std::vector<int>> pattern;
  if (prov.kind == Construction::APresented && prov.params == std::vector<std::size_t>{2, 2})
    pattern = {{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 3}, {0, 0, 0, 1}};
  else if (prov.kind == Construction::BPresented && prov.params == std::vector<std::size_t>{2, 2})
    pattern = {{1, 2, 3}, {0, 1, 4}, {0, 0, 1}};
  else if (prov.kind == Construction::CPresented && prov.params == std::vector<std::size_t>{4})
    pattern = {{1, 2, 3, 4}, {0, 1, 5, 6}, {0, 0, 1, 2}, {0, 0, 0, 1}};
  if (pattern.empty()) return ok();
  const std::size_t m = prov.params.size() > 1 ? prov.params[1] : 0;
  const auto v = presented_iso(family_iso(prov.kind), prov.params[0], m, prov.parts[0], c.caps);
  if (auto why = pattern_mismatch(*v.target, pattern); !why.empty()) return bad("displayed shape: " + why);
  return ok("displayed matrix shape confirmed");
}

Claim make(std::string id, std::string title, std::string quote, std::string formalization, std::string applicability,
           CostClass cost, std::function<bool(const ClaimContext&)> applies,
           std::function<Outcome(const ClaimContext&)> check) {
  return {std::move(id), std::move(title), std::move(quote), std::move(formalization), std::move(applicability),
          cost, std::move(applies), std::move(check)};
}

std::vector<Claim> build_registry() {
  using C = CostClass;
  std::vector<Claim> r;
  r.push_back(make("C01", "containments", "N(R) and J(R) are contained in QN(R)", "N ⊆ QN and J ⊆ QN", "always",
                   C::Cheap, always, containments));
  r.push_back(make("C02", "disjointness", "QN(R) ∩ U(R) = ∅ and QN(R) ∩ Id(R) = ∅",
                   "QN ∩ U = ∅ and QN ∩ (Id \\ {0}) = ∅; with --literal, QN ∩ Id = ∅ is flagged at e = 0", "always",
                   C::Cheap, always, disjointness));
  r.push_back(make("C03", "product QN", "QN(∏ R_i) = ∏ QN(R_i)",
                   "QN, U, Id, N and J of a product are the componentwise sets", "direct products", C::Quadratic,
                   [](const ClaimContext& c) { return kind_of(c) == Construction::Product; }, product_factorization));
  r.push_back(make("C04", "product UQ", "A direct product of rings is UQ if and only if each R_i is UQ",
                   "is_UQ(∏ R_i) ⟺ ∀i is_UQ(R_i)", "direct products", C::Cheap,
                   [](const ClaimContext& c) { return kind_of(c) == Construction::Product; }, product_uq));
  r.push_back(make("C05", "corners", "If R is a UQ ring and e ∈ Id(R), then the corner subring eRe is a UQ ring",
                   "QN(eRe) = QN(R) ∩ eRe for every nonzero idempotent e; R UQ ⟹ eRe UQ", "always", C::Quadratic,
                   always, corners));
  r.push_back(make("C06", "good subrings",
                   "Let S be a good subring of R. Then QN(R) ∩ S ⊆ QN(S); if R is UQ then S is UQ",
                   "for each registered subring S with U(R) ∩ S = U(S): QN(R) ∩ S ⊆ QN(S) and R UQ ⟹ S UQ",
                   "constructions with registered subrings", C::Quadratic, always, good_subrings));
  r.push_back(make("C07", "structured QN membership",
                   "{(r, m) : r ∈ QN(R)} ⊆ QN(T(R, M)), and likewise for formal triangular, T_n(R) and R[x]/(x^n); "
                   "equality holds when R and S are UQ rings",
                   "predicted set (base components in QN) ⊆ QN, with equality over UQ bases",
                   "trivial extensions, formal triangular rings, T_n(R), R[x]/(x^n)", C::Quadratic, structured_kind,
                   structured_qn));
  r.push_back(make("C08", "transfer", "T_n(R) is a UQ ring if and only if R is a UQ ring (and likewise for T(R, M), "
                                      "formal triangular rings and R[x]/(x^n))",
                   "is_UQ(construction) ⟺ base rings UQ",
                   "trivial extensions, formal triangular rings, T_n(R), R[x]/(x^n)", C::Cheap, structured_kind,
                   transfer));
  r.push_back(make("C09", "central closure",
                   "Let b ∈ Z(R). If a ∈ QN(R), then ab ∈ QN(R); if a, b ∈ QN(R), then a + b ∈ QN(R)",
                   "∀a ∈ QN, b ∈ Z: ab ∈ QN, and a + b ∈ QN when b ∈ QN; in M_2(F_2), e12 and e21 are in QN while "
                   "their product and sum are not",
                   "always", C::Quadratic, always, central_closure));
  r.push_back(make("C10", "UQ characterization", "R is a UQ ring if, and only if, U(R) + (U(R) ∩ Z(R)) = QN(R)",
                   "is_UQ ⟺ {u + v : u ∈ U, v ∈ U ∩ Z} = QN; a disagreement is flagged", "always", C::Quadratic,
                   always, unit_sum_characterization));
  r.push_back(make("C11", "matrix rings", "For any ring S ≠ 0 and any n ≥ 2, M_n(S) is not a UQ ring",
                   "is_UQ is false; U = [[0,1],[1,1]] and I − U are units of the top-left 2x2 corner; some unit v has v − 1 a unit",
                   "matrix rings with n ≥ 2", C::Cheap,
                   [](const ClaimContext& c) {
                     return kind_of(c) == Construction::Matrix && c.profile.ring->provenance().params[0] >= 2;
                   },
                   matrix_not_uq));
  r.push_back(make("C12", "ab/ba symmetry",
                   "Let R be a UQ ring and a, b ∈ R. Then 1 − ab ∈ QN(R) if, and only if, 1 − ba ∈ QN(R)",
                   "∀a, b: 1 − ab ∈ QN ⟺ 1 − ba ∈ QN", "UQ rings", C::Quadratic, uq_only, ab_ba));
  r.push_back(make("C13", "unit sums", "For any u1, u2 ∈ U(R), u1 + u2 ≠ 1, and the same holds in R/J(R)",
                   "no two units sum to 1 in R or in R/J(R)", "UQ rings", C::Cheap, uq_only, unit_sums));
  r.push_back(make("C14", "two and squares",
                   "2 ∈ QN(R) and, in particular, 2 ∈ J(R); x ∈ QN(R) precisely when x² ∈ QN(R); QN(R) is closed "
                   "under addition uniquely when QN(R) is a subring of R",
                   "2 ∈ QN ∩ J; x ∈ QN ⟺ x² ∈ QN; QN additively closed ⟺ QN closed under +, −, ·", "UQ rings",
                   C::Quadratic, uq_only, two_and_squares));
  r.push_back(make("C15", "Z_n criterion", "The ring Z_n is UQ if, and only if, n is a power of 2",
                   "is_UQ(Z/n) ⟺ n = 2^k", "rings Z/n", C::Cheap,
                   [](const ClaimContext& c) { return kind_of(c) == Construction::Zmod; }, zn_criterion));
  r.push_back(make("C16", "division, local and semisimple UQ rings",
                   "If R is a division ring, then R ≅ F_2; if R is local, then R/J(R) ≅ F_2 (a local ring is UQ if, "
                   "and only if, it is uniquely clean); if R is semisimple, then R ≅ F_2 × ⋯ × F_2",
                   "UQ division ⟹ |R| = 2; UQ local ⟹ |R/J| = 2; UQ semisimple ⟹ Boolean; local ⟹ (UQ ⟺ "
                   "uniquely clean)",
                   "UQ rings and local rings", C::Cheap, uq_or_local, uq_structure));
  r.push_back(make("C17", "semipotent equivalences",
                   "For a semipotent ring: R/J(R) is UQ ⟺ R/J(R) is Boolean ⟺ R is UJ ⟺ R/J(R) is UU ⟺ R is UQ "
                   "with QN(R) = J(R)",
                   "the five conditions agree; finite rings are semipotent", "always", C::Quadratic, always,
                   semipotent_equivalences));
  r.push_back(make("C18", "regular rings",
                   "A (von Neumann) regular ring R is UQ if, and only if, R is UJ if, and only if, R is UU if, and "
                   "only if, R is Boolean",
                   "is_UQ = is_UJ = is_UU = is_boolean", "regular rings", C::Cheap,
                   [](const ClaimContext& c) { return c.profile.is_regular; }, regular_rings));
  r.push_back(make("C19", "clean and quasi nil-clean elements",
                   "For any UQ ring, an element is clean if, and only if, it is quasi nil-clean; strongly clean if, "
                   "and only if, it is strongly quasi nil-clean",
                   "per element: clean ⟺ quasi nil-clean and strongly clean ⟺ strongly quasi nil-clean", "UQ rings",
                   C::Quadratic, uq_only, clean_vs_qnc));
  r.push_back(make("C20", "UQ via central idempotents",
                   "R is UQ ⟺ every clean element is strongly quasi nil-clean ⟺ for every u ∈ U(R) there exist "
                   "e = e² ∈ Z(R) and q ∈ QN(R) with u = e + q",
                   "the three conditions agree", "always", C::Quadratic, always, uq_three_way));
  r.push_back(make("C21", "strongly quasi nil-clean rings",
                   "A ring is strongly quasi nil-clean if, and only if, it is UQ and strongly clean",
                   "every element strongly quasi nil-clean ⟺ UQ and strongly clean (each direction checked)", "always",
                   C::Quadratic, always, sqnc_rings));
  r.push_back(make("C22", "potent equivalences",
                   "For a potent ring: R is UQ ⟺ R/J(R) is UQ ⟺ R/J(R) is Boolean ⟺ R is UJ ⟺ R/J(R) is UJ ⟺ "
                   "R/J(R) is UU",
                   "the six conditions agree; finite rings are potent", "always", C::Quadratic, always,
                   potent_equivalences));
  r.push_back(make("C23", "finite coincidence",
                   "For a finite ring: R is UQ ⟺ R is UJ ⟺ R is UU", "is_UQ = is_UJ = is_UU", "always", C::Cheap,
                   always, finite_coincidence));
  r.push_back(make("C24", "J-clean rings", "R is a potent UQ ring if, and only if, R is a J-clean ring",
                   "is_UQ ⟺ is_J_clean (finite rings are potent)", "always", C::Quadratic, always, potent_j_clean));
  r.push_back(make("C25", "radical lifting",
                   "Let I ⊆ J(R) be an ideal. If q + I ∈ QN(R/I), then q ∈ QN(R); if R/I is UQ, then R is UQ",
                   "for I = J(R) and the ideal of the first generator of J(R): preimage of QN(R/I) ⊆ QN(R), and R/I "
                   "UQ ⟹ R UQ",
                   "rings with J(R) ≠ 0", C::Quadratic, nonzero_radical, radical_lifting));
  r.push_back(make("C26", "geometric sums",
                   "Let R be UQ, a ∈ U(R), f_n = 1 + a + ⋯ + a^n. If n is even, then f_n ∈ U(R); if n is odd, then "
                   "f_n ∈ QN(R)",
                   "for every unit a and n = 1..6", "UQ rings", C::Quadratic, uq_only, geometric_sums));
  r.push_back(make("C27", "group ring necessity", "If RG is a UQ ring, then R is a UQ ring and G is a 2-group",
                   "G not a 2-group ⟹ RG not UQ; RG UQ ⟹ R UQ", "group rings", C::Cheap, group_ring_kind,
                   group_necessity));
  r.push_back(make("C28", "group ring sufficiency",
                   "If R is a UQ ring and G is a locally finite 2-group, then RG is a UQ ring", "is_UQ(RG)",
                   "group rings over UQ rings with G a 2-group", C::Cheap, uq_base_two_group, group_sufficiency));
  r.push_back(make("C29", "group ring UJ", "If R is a UJ ring and G is a locally finite 2-group, then RG is a UJ ring",
                   "is_UJ(RG)", "group rings over UJ rings with G a 2-group", C::Cheap,
                   [](const ClaimContext& c) {
                     return group_ring_kind(c) && two_group(c) && base_profile(c)->is_UJ;
                   },
                   group_uj));
  r.push_back(make("C30", "augmentation ideal",
                   "Let G be a locally finite 2-group and let R be a UQ ring. Then Δ(RG) ⊆ J(RG)", "Δ(RG) ⊆ J(RG)",
                   "group rings over UQ rings with G a 2-group", C::Cheap, uq_base_two_group, augmentation));
  r.push_back(make("C31", "presented ring isomorphisms",
                   "A_{n,m}(R) ≅ T_{n,m}(R), B_{n,m}(R) ≅ S_{n,m}(R) and C_n(R) ≅ U_n(R)",
                   "the explicit coefficient maps are bijective, additive, multiplicative and unital",
                   "A, B, C, Tnm, S and U rings", C::Quadratic, family, presented_isos));
  r.push_back(make("C32", "unit shapes",
                   "U(A_{n,m}(R)) = ∇_{U(R)}(A_{n,m}(R)), and likewise for B_{n,m}(R) and C_n(R)",
                   "an element is a unit ⟺ its constant coefficient is a unit of R", "A, B, C, Tnm, S and U rings",
                   C::Cheap, family, unit_shapes));
  r.push_back(make("C33", "presented ring transfer", "A_{n,m}(R) (also B_{n,m}(R), C_n(R)) is UQ if, and only if, R is UQ",
                   "is_UQ(ring) ⟺ is_UQ(R)", "A, B, C, Tnm, S and U rings", C::Cheap, family, family_transfer));
  r.push_back(make("C34", "displayed shapes and gs-Drazin inverses",
                   "R[x,y | x²=xy=y²=0], R<x,y | x²=xy=y²=0> and R<x,y | x²=xyx=y²=0> are the displayed matrix rings; "
                   "a is strongly quasi nil-clean if, and only if, a is gs-Drazin invertible",
                   "matrix images of A(2,2), B(2,2), C(4) match the displayed patterns; per element: gs-Drazin "
                   "inverse exists ⟺ strongly quasi nil-clean",
                   "always", C::Quadratic, always, shapes_and_gs_drazin));
  return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim& find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaim(id);
}

std::string explain(const std::string& id) {
  const Claim& c = find_claim(id);
  return c.id + " " + c.title + "\n  statement: " + c.quote + "\n  checked as: " + c.formalization +
         "\n  applies to: " + c.applicability + "\n";
}

std::vector<Ring> default_corpus(const Caps& caps) {
  std::vector<Ring> out;
  auto add = [&](const std::function<Ring()>& build) {
    try {
      Ring r = build();
      if (r->size() <= caps.table) out.push_back(std::move(r));
    } catch (const SizeCapExceeded&) {
    }
  };
  const Ring f2 = zmod(2, caps), z4 = zmod(4, caps), z6 = zmod(6, caps), z8 = zmod(8, caps);
  for (std::size_t n = 2; n <= 16; ++n) add([&] { return zmod(n, caps); });
  add([&] { return zmod(32, caps); });
  add([&] { return zmod(64, caps); });
  add([&] { return product({f2, f2}, caps); });
  add([&] { return product({f2, z4}, caps); });
  const Ring m2 = matrix_ring(2, f2, caps);
  out.push_back(m2);
  add([&] { return matrix_ring(2, z4, caps); });
  add([&] { return matrix_ring(2, product({f2, f2}, caps), caps); });
  add([&] { return matrix_ring(3, f2, caps); });
  for (std::size_t n = 2; n <= 4; ++n) add([&] { return upper_triangular(n, f2, caps); });
  add([&] { return upper_triangular(2, z4, caps); });
  add([&] { return upper_triangular(3, z4, caps); });
  for (const Ring& b : {f2, z4, z8}) add([&] { return trivial_extension(b, caps); });
  for (std::size_t n = 1; n <= 4; ++n) add([&] { return poly_quotient(f2, n, caps); });
  for (std::size_t n = 1; n <= 3; ++n) add([&] { return poly_quotient(z4, n, caps); });
  const std::vector<Group> groups{cyclic(2), cyclic(3), cyclic(4), group_product(cyclic(2), cyclic(2)), dihedral(4),
                                  quaternion8()};
  for (const Ring& b : {f2, z4})
    for (const Group& g : groups) add([&] { return group_ring(b, g, caps); });
  add([&] { return group_ring(f2, group_product(cyclic(2), cyclic(3)), caps); });
  const Ring m2t = materialize(m2, caps.table);
  for (Index e = 0; e < m2t->size(); ++e)
    if (e != m2t->zero() && m2t->mul(e, e) == e) add([&] { return corner(m2, e, caps).ring; });
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    add([&] { return a_ring(n, m, f2, caps); });
    add([&] { return b_ring(n, m, f2, caps); });
    add([&] { return s_ring(n, m, f2, caps); });
    add([&] { return t_ring(n, m, f2, caps); });
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    add([&] { return c_ring(n, f2, caps); });
    add([&] { return u_ring(n, f2, caps); });
  }
  add([&] { return quotient_ring(z8, Subset::of(8, {0, 4}), caps); });
  // non-UQ bases for the transfer statements, and formal triangular rings
  add([&] { return trivial_extension(z6, caps); });
  add([&] { return poly_quotient(z6, 2, caps); });
  add([&] { return poly_quotient(z6, 3, caps); });
  add([&] { return upper_triangular(2, z6, caps); });
  add([&] { return formal_triangular(f2, f2, Bimodule::regular(f2), caps); });
  add([&] { return formal_triangular(z4, z4, Bimodule::regular(z4), caps); });
  add([&] { return formal_triangular(f2, zmod(3, caps), Bimodule::zero(f2, zmod(3, caps)), caps); });
  return out;
}

std::string corpus_digest(const std::vector<Ring>& corpus) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const Ring& ring : corpus) {
    for (char ch : ring->label()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ULL;
    }
    mix(ring->size());
    const Ring t = materialize(ring, std::max<std::size_t>(ring->size(), Caps{}.table));
    for (Index a = 0; a < t->size(); ++a)
      for (Index b = 0; b < t->size(); ++b) mix((static_cast<std::uint64_t>(t->add(a, b)) << 32) | t->mul(a, b));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ClaimReport run_claims(const std::vector<Ring>& corpus, const RunOptions& options, const Caps& caps) {
  ClaimReport report;
  report.caps = caps;
  report.literal = options.literal;
  std::vector<const Claim*> selected;
  if (options.only.empty()) {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : options.only) selected.push_back(&find_claim(id));
  }
  for (const auto* c : selected) report.claims.push_back(c->id);
  for (const auto& r : corpus) report.corpus.emplace_back(r->label(), r->size());
  report.digest = corpus_digest(corpus);

  ProfileCache cache(caps);
  for (const Ring& ring : corpus) {
    std::shared_ptr<const RingProfile> profile;
    if (ring->size() <= caps.table) profile = cache.get(ring);
    for (const auto* claim : selected) {
      Cell cell{claim->id, ring->label(), {}, 0};
      const auto start = std::chrono::steady_clock::now();
      if (!profile) {
        cell.outcome = {Status::Skipped, {}, "ring exceeds the table cap"};
      } else {
        const ClaimContext ctx{ring, *profile, cache, caps, options.literal};
        try {
          cell.outcome = claim->applies(ctx) ? claim->check(ctx) : Outcome{Status::Inapplicable, {}, {}};
        } catch (const SizeCapExceeded& e) {
          cell.outcome = {Status::Skipped, {}, e.what()};
        }
      }
      cell.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

nlohmann::json to_json(const ClaimReport& report, bool timings) {
  nlohmann::json j;
  j["config"] = {{"seed", report.caps.seed},
                 {"table_cap", report.caps.table},
                 {"structure_cap", report.caps.structure},
                 {"axiom_cap", report.caps.axiom},
                 {"nstar_cap", report.caps.nstar},
                 {"literal", report.literal}};
  j["digest"] = report.digest;
  j["corpus"] = nlohmann::json::array();
  for (const auto& [label, size] : report.corpus) j["corpus"].push_back({{"ring", label}, {"size", size}});
  j["claims"] = nlohmann::json::array();
  for (const auto& id : report.claims) {
    const Claim& c = find_claim(id);
    j["claims"].push_back({{"id", c.id}, {"title", c.title}, {"statement", c.quote}, {"applies_to", c.applicability}});
  }
  j["cells"] = nlohmann::json::array();
  std::map<std::string, std::size_t> summary;
  for (const auto& cell : report.cells) {
    nlohmann::json c{{"claim", cell.claim}, {"ring", cell.ring}, {"status", to_string(cell.outcome.status)}};
    if (!cell.outcome.witness.empty()) c["witness"] = cell.outcome.witness;
    if (!cell.outcome.note.empty()) c["note"] = cell.outcome.note;
    if (timings) c["millis"] = cell.millis;
    j["cells"].push_back(std::move(c));
    ++summary[to_string(cell.outcome.status)];
  }
  j["summary"] = summary;
  return j;
}

std::string to_text(const ClaimReport& report) {
  std::ostringstream out;
  out << "corpus: " << report.corpus.size() << " rings, digest " << report.digest << ", seed " << report.caps.seed
      << "\n";
  for (const auto& id : report.claims) {
    std::map<Status, std::size_t> counts;
    for (const auto& cell : report.cells)
      if (cell.claim == id) ++counts[cell.outcome.status];
    out << id << "  " << find_claim(id).title << ":";
    for (const auto& [status, n] : counts) out << " " << to_string(status) << "=" << n;
    out << "\n";
  }
  for (const auto& cell : report.cells)
    if (cell.outcome.status == Status::Fail || cell.outcome.status == Status::Flagged)
      out << "  " << to_string(cell.outcome.status) << " " << cell.claim << " " << cell.ring << ": "
          << cell.outcome.witness << "\n";
  return out.str();
}

bool has_failures(const ClaimReport& report, bool strict) {
  for (const auto& cell : report.cells) {
    if (cell.outcome.status == Status::Fail) return true;
    if (strict && cell.outcome.status == Status::Flagged) return true;
  }
  return false;
}

}  // namespace uqring
