#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "uqring/analysis.hpp"
#include "uqring/claims.hpp"
#include "uqring/errors.hpp"

using namespace uqring;

namespace {

const Ring& f2() {
  static const Ring r = zmod(2);
  return r;
}

const std::vector<Ring>& corpus() {
  static const std::vector<Ring> c = default_corpus();
  return c;
}

ProfileCache& cache() {
  static ProfileCache c;
  return c;
}

}  // namespace

TEST(Analysis, DistinguishedSubsetsOfSmallRings) {
  const Ring z8 = zmod(8);
  EXPECT_EQ(units(*z8).set, Subset::of(8, {1, 3, 5, 7}));
  EXPECT_EQ(idempotents(*z8), Subset::of(8, {0, 1}));
  EXPECT_EQ(idempotents(*product({f2(), f2()})).size(), 4u);
  EXPECT_EQ(nilpotents(*z8), Subset::of(8, {0, 2, 4, 6}));
  EXPECT_EQ(nilpotents(*product({f2(), f2()})).size(), 1u);
  EXPECT_EQ(jacobson_radical(*z8), Subset::of(8, {0, 2, 4, 6}));
  EXPECT_EQ(quasinilpotents(*z8), Subset::of(8, {0, 2, 4, 6}));
  EXPECT_EQ(quasinilpotents(*f2()), Subset::of(2, {0}));
}

TEST(Analysis, MatrixRingOverF2) {
  const Ring m2 = matrix_ring(2, f2());
  EXPECT_EQ(units(*m2).set.size(), 6u);
  EXPECT_EQ(jacobson_radical(*m2).size(), 1u);
  const Index a = oracle::matrix(*m2, {1, 1, 1, 1});
  EXPECT_FALSE(jacobson_radical(*m2).contains(a));
  EXPECT_TRUE(quasinilpotents(*m2).contains(a));
  EXPECT_EQ(lower_nilradical(m2).size(), 1u);
  EXPECT_FALSE(classify(m2)->is_UQ);
}

TEST(Analysis, FrozenCounts) {
  const auto m3 = classify(matrix_ring(3, f2()));
  EXPECT_EQ(m3->units.set.size(), 168u);
  EXPECT_EQ(m3->quasinilpotents.size(), 64u);
  const auto t2 = classify(upper_triangular(2, f2()));
  EXPECT_EQ(t2->jacobson.size(), 2u);
  EXPECT_EQ(t2->jacobson, oracle::nilpotents(*t2->ring));
  EXPECT_EQ(t2->is_2primal, std::optional<bool>(true));
  EXPECT_EQ(lower_nilradical(zmod(8)), Subset::of(8, {0, 2, 4, 6}));
}

TEST(Analysis, AugmentationIdeal) {
  const Ring rg = group_ring(f2(), cyclic(2));
  const Subset delta = augmentation_ideal(*rg);
  ASSERT_EQ(delta.size(), 2u);
  for (Index f : delta.members())
    if (f != rg->zero()) EXPECT_EQ(rg->digits(f), (std::vector<Index>{1, 1}));
  EXPECT_THROW(augmentation_ideal(*zmod(4)), NotAGroupRing);
}

TEST(Analysis, ClassifierVerdicts) {
  EXPECT_TRUE(classify(zmod(8))->is_UQ);
  EXPECT_FALSE(classify(zmod(6))->is_UQ);
  EXPECT_FALSE(classify(matrix_ring(2, f2()))->is_UQ);
  EXPECT_TRUE(classify(group_ring(f2(), cyclic(4)))->is_UQ);
  EXPECT_TRUE(classify(product({f2(), f2()}))->is_boolean);
  Caps small;
  small.table = 100;
  EXPECT_THROW(classify(matrix_ring(2, zmod(4)), small), SizeCapExceeded);
}

TEST(Analysis, ElementPredicates) {
  const Ring z6 = zmod(6);
  const auto p = element_predicates(z6, 3);
  EXPECT_TRUE(p.clean);
  EXPECT_EQ(gs_drazin_inverse(zmod(8), 6), std::optional<Index>(0));
  for (const Ring& r : {zmod(8), matrix_ring(2, f2()), upper_triangular(2, zmod(4))})
    EXPECT_EQ(gs_drazin_inverse(r, r->one()), std::optional<Index>(r->one()));
}

TEST(Analysis, GeometricSums) {
  const auto p = classify(upper_triangular(2, zmod(4)));
  ASSERT_TRUE(p->is_UQ);
  for (Index u : p->units.set.members())
    for (const auto& v : geometric_sum_check(*p, u, 6)) EXPECT_TRUE(v.holds) << "u=" << u << " n=" << v.n;
  EXPECT_THROW(geometric_sum_check(*classify(zmod(6)), 1, 3), PreconditionFailed);
  EXPECT_THROW(geometric_sum_check(*p, p->ring->zero(), 3), PreconditionFailed);
}

TEST(Analysis, SweepMatchesNaiveOracleOnSmallCorpusRings) {
  std::size_t checked = 0;
  for (const Ring& r : corpus()) {
    if (r->size() > 64) continue;
    const auto p = cache().get(r);
    ASSERT_EQ(p->quasinilpotents, oracle::quasinilpotents(*p->ring)) << r->label();
    ASSERT_EQ(p->jacobson, oracle::jacobson(*p->ring)) << r->label();
    ASSERT_EQ(p->units.set, oracle::units(*p->ring)) << r->label();
    ++checked;
  }
  EXPECT_GT(checked, 40u);
}

TEST(Analysis, ContainmentsHoldAcrossCorpus) {
  for (const Ring& r : corpus()) {
    if (r->size() > 1024) continue;
    const auto p = cache().get(r);
    SCOPED_TRACE(r->label());
    EXPECT_TRUE(p->nilpotents.is_subset_of(p->quasinilpotents));
    EXPECT_TRUE(p->jacobson.is_subset_of(p->quasinilpotents));
    EXPECT_TRUE(p->quasinilpotents.intersect(p->units.set).empty());
    EXPECT_EQ(p->quasinilpotents.intersect(p->idempotents), Subset::of(r->size(), {p->ring->zero()}));
    if (p->lower_nilradical) EXPECT_TRUE(p->lower_nilradical->is_subset_of(p->nilpotents));
    EXPECT_TRUE(p->is_dedekind_finite);
  }
}

TEST(Analysis, ProductLaw) {
  const Ring r = upper_triangular(2, f2()), s = zmod(4);
  const Ring rs = product({r, s});
  const auto pr = classify(r), ps = classify(s), prs = classify(rs);
  for (Index a = 0; a < rs->size(); ++a) {
    const auto d = rs->digits(a);
    EXPECT_EQ(prs->quasinilpotents.contains(a),
              pr->quasinilpotents.contains(d[0]) && ps->quasinilpotents.contains(d[1]));
    EXPECT_EQ(prs->units.set.contains(a), pr->units.set.contains(d[0]) && ps->units.set.contains(d[1]));
    EXPECT_EQ(prs->jacobson.contains(a), pr->jacobson.contains(d[0]) && ps->jacobson.contains(d[1]));
  }
}

TEST(Analysis, CornerLaw) {
  for (const Ring& r : {matrix_ring(2, f2()), upper_triangular(3, f2()), matrix_ring(2, zmod(4))}) {
    const auto pr = classify(r);
    for (Index e : pr->idempotents.members()) {
      if (e == pr->ring->zero()) continue;
      const CornerRing c = corner(r, e);
      const Subset qn = quasinilpotents(*c.ring);
      for (Index x = 0; x < c.ring->size(); ++x)
        ASSERT_EQ(qn.contains(x), pr->quasinilpotents.contains(c.embedding.map[x])) << r->label() << " e=" << e;
    }
  }
}

TEST(Analysis, UQCoincidesWithUJAndUU) {
  for (const Ring& r : corpus()) {
    const auto p = cache().get(r);
    EXPECT_EQ(p->is_UQ, p->is_UJ) << r->label();
    EXPECT_EQ(p->is_UQ, p->is_UU) << r->label();
  }
}

TEST(Analysis, CacheComputesOnceUnderConcurrency) {
  ProfileCache local;
  const Ring r = upper_triangular(3, f2());
  std::vector<std::shared_ptr<const RingProfile>> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) threads.emplace_back([&, i] { seen[i] = local.get(r); });
  for (auto& t : threads) t.join();
  for (const auto& p : seen) EXPECT_EQ(p, seen[0]);
}
