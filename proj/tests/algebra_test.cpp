#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "semilab/algebra/catalog.hpp"
#include "semilab/algebra/embedding.hpp"
#include "semilab/algebra/instances.hpp"
#include "semilab/algebra/invariance.hpp"

using namespace semilab;

namespace {

oracle::Pt to_pt(const Element& e) {
  if (const auto* v = std::get_if<RealVector>(&e)) return {(*v)[0], (*v)[1], (*v)[2]};
  if (const auto* f = std::get_if<AffineMap>(&e)) return {f->scale, f->shift, 0.0};
  if (const auto* h = std::get_if<HeisenbergPoint>(&e)) return {h->x, h->y, h->z};
  ADD_FAILURE() << "no oracle coordinates";
  return {};
}

const char* const kGroups[] = {"euclidean1", "euclidean2", "affine", "heisenberg", "cyclic5"};

}  // namespace

TEST(Compose, CounterexampleKeepsRightExponent) {
  const auto cex = make_counterexample();
  EXPECT_EQ(std::get<CexWord>(cex->compose(CexWord{0, 1}, CexWord{1, 0})), (CexWord{1, 0}));
  EXPECT_EQ(std::get<CexWord>(cex->compose(CexWord{1, 0}, CexWord{0, 1})), (CexWord{1, 1}));
}

TEST(Compose, PlaneAddsVectors) {
  const auto plane = make_euclidean(2);
  EXPECT_EQ(std::get<RealVector>(plane->compose(RealVector{1, 2}, RealVector{3, 4})),
            (RealVector{4, 6}));
}

TEST(Compose, AffineComposesMaps) {
  const auto aff = make_affine();
  EXPECT_EQ(std::get<AffineMap>(aff->compose(AffineMap{2, 1}, AffineMap{3, 5})), (AffineMap{6, 11}));
}

TEST(Compose, HeisenbergCommutatorTerm) {
  const auto h = make_heisenberg();
  const auto p = std::get<HeisenbergPoint>(h->compose(HeisenbergPoint{1, 0, 0}, HeisenbergPoint{0, 1, 0}));
  EXPECT_EQ(p, (HeisenbergPoint{1, 1, 0.5}));
}

TEST(Distance, CounterexampleManhattan) {
  const auto cex = make_counterexample();
  EXPECT_EQ(cex->distance(CexWord{0, 1}, CexWord{1, 0}), 2.0);
}

TEST(Distance, AffineOnScaleAxis) {
  const auto aff = make_affine();
  const double d = aff->distance(AffineMap{1, 0}, AffineMap{2, 0});
  EXPECT_NEAR(d, std::acosh(1.25), 1e-15);
  EXPECT_NEAR(d, std::log(1.25 + std::sqrt(0.5625)), 1e-15);
  EXPECT_NEAR(d, 0.69314718, 1e-8);
}

TEST(Distance, SelfDistanceIsZero) {
  for (const auto& entry : Catalog::builtin().entries()) {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      const auto g = entry.instance->sample(rng);
      EXPECT_EQ(entry.instance->distance(g, g), 0.0) << entry.instance->name();
    }
  }
}

TEST(Distance, MatchesOracleFormulas) {
  struct Case {
    const char* name;
    oracle::Geometry geometry;
  };
  const Case cases[] = {{"euclidean1", oracle::line()},
                        {"euclidean2", oracle::plane()},
                        {"affine", oracle::affine()},
                        {"heisenberg", oracle::heisenberg()}};
  for (const auto& c : cases) {
    const auto inst = find_instance(c.name);
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
      const auto a = inst->sample(rng);
      const auto b = inst->sample(rng);
      const double expected = c.geometry.dist(to_pt(a), to_pt(b));
      EXPECT_NEAR(inst->distance(a, b), expected, 1e-9 * (1.0 + expected)) << c.name;
      const auto ab = to_pt(inst->compose(a, b));
      const auto ref = c.geometry.mul(to_pt(a), to_pt(b));
      EXPECT_NEAR(ab.a, ref.a, 1e-12 * (1.0 + std::fabs(ref.a))) << c.name;
      EXPECT_NEAR(ab.b, ref.b, 1e-12 * (1.0 + std::fabs(ref.b))) << c.name;
      EXPECT_NEAR(ab.c, ref.c, 1e-12 * (1.0 + std::fabs(ref.c))) << c.name;
    }
  }
}

TEST(Invariance, RealLineBiInvariant) {
  const auto rep = check_invariance(*make_euclidean(1), InvarianceKind::bi, Sampled{10'000, 1});
  EXPECT_TRUE(rep.holds);
  EXPECT_FALSE(rep.witness);
}

TEST(Invariance, CounterexampleStrongLeftWitness) {
  const auto cex = make_counterexample();
  const auto rep = check_invariance(*cex, InvarianceKind::strong_left, Exhaustive{5});
  ASSERT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness);
  const auto& w = *rep.witness;
  ASSERT_EQ(w.elements.size(), 2u);
  EXPECT_EQ(std::get<CexWord>(w.elements[0]), (CexWord{0, 1}));
  EXPECT_EQ(std::get<CexWord>(w.elements[1]), (CexWord{1, 0}));
  EXPECT_EQ(w.first, 2.0);
  EXPECT_EQ(w.second, 1.0);
  EXPECT_TRUE(check_invariance(*cex, InvarianceKind::left, Exhaustive{5}).holds);
}

TEST(Invariance, AffineRightFailsOnQuotedTriple) {
  const auto aff = make_affine();
  const AffineMap g{1, 0}, g2{2, 0}, c{1, 1};
  const double lhs = aff->distance(aff->compose(g, c), aff->compose(g2, c));
  const double rhs = aff->distance(g, g2);
  EXPECT_NEAR(lhs, std::acosh(1.5), 1e-15);
  EXPECT_NEAR(rhs, std::acosh(1.25), 1e-15);
  const auto rep = check_invariance(*aff, InvarianceKind::right, Sampled{1000, 2});
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness);
  EXPECT_GT(std::fabs(rep.witness->first - rep.witness->second), rep.tolerance);
}

TEST(Invariance, HeisenbergRightWitnessRecomputes) {
  const auto h = make_heisenberg();
  const auto rep = check_invariance(*h, InvarianceKind::right, Sampled{10'000, 7});
  ASSERT_FALSE(rep.holds);
  ASSERT_TRUE(rep.witness);
  const auto& w = *rep.witness;
  ASSERT_EQ(w.elements.size(), 3u);
  const auto geo = oracle::heisenberg();
  const auto a = to_pt(w.elements[0]), b = to_pt(w.elements[1]), c = to_pt(w.elements[2]);
  EXPECT_NEAR(w.first, geo.dist(geo.mul(a, c), geo.mul(b, c)), 1e-9);
  EXPECT_NEAR(w.second, geo.dist(a, b), 1e-9);
}

TEST(Invariance, UnknownKindRejected) {
  EXPECT_THROW(parse_invariance_kind("sideways"), UnknownName);
}

TEST(Invariance, SampledRunIsSeedDeterministic) {
  const auto h = make_heisenberg();
  const auto a = check_invariance(*h, InvarianceKind::right, Sampled{500, 9});
  const auto b = check_invariance(*h, InvarianceKind::right, Sampled{500, 9});
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->first, b.witness->first);
  EXPECT_EQ(a.max_discrepancy, b.max_discrepancy);
}

// Annotated classes agree with sampled checks, and strong-left never holds
// where plain left fails.
TEST(InvarianceProperty, AnnotationsMatchChecks) {
  for (const auto& entry : Catalog::builtin().entries()) {
    const auto& inst = *entry.instance;
    const auto& a = inst.annotations();
    const Sampled mode{2000, 5};
    const bool left = check_invariance(inst, InvarianceKind::left, mode).holds;
    const bool right = check_invariance(inst, InvarianceKind::right, mode).holds;
    const bool strong = check_invariance(inst, InvarianceKind::strong_left, mode).holds;
    if (a.left) {
      EXPECT_TRUE(left) << inst.name();
    }
    if (a.right) {
      EXPECT_TRUE(right) << inst.name();
    }
    if (a.strong_left) {
      EXPECT_TRUE(strong) << inst.name();
    }
    if (strong) {
      EXPECT_TRUE(left) << inst.name();
    }
    if (!a.right) {
      EXPECT_FALSE(right) << inst.name();
    }
    if (!a.strong_left) {
      EXPECT_FALSE(strong) << inst.name();
    }
  }
}

TEST(AxiomsProperty, AssociativityAndMetric) {
  for (const auto& entry : Catalog::builtin().entries()) {
    const auto& inst = *entry.instance;
    const auto assoc = check_associativity(inst, Sampled{3000, 13});
    EXPECT_TRUE(assoc.holds) << inst.name() << " max " << assoc.max_discrepancy;
    const auto metric = check_metric_axioms(inst, Sampled{3000, 17});
    EXPECT_TRUE(metric.holds) << inst.name() << " max " << metric.max_discrepancy;
  }
  const auto cex = make_counterexample();
  EXPECT_TRUE(check_associativity(*cex, Exhaustive{4}).holds);
  EXPECT_TRUE(check_metric_axioms(*cex, Exhaustive{4}).holds);
}

TEST(AxiomsProperty, StrongLeftMeansBaseIndependent) {
  for (const char* name : kGroups) {
    const auto inst = find_instance(name);
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
      const auto a = inst->sample(rng);
      const auto c = inst->sample(rng);
      const auto b = inst->sample(rng);
      const double da = inst->distance(a, inst->compose(a, b));
      const double dc = inst->distance(c, inst->compose(c, b));
      EXPECT_NEAR(da, dc, 1e-9 * (1.0 + da)) << name;
    }
  }
}

TEST(Idempotents, CounterexampleHasLeftIdentityG) {
  const auto found = idempotent_scan(*make_counterexample(), Exhaustive{5});
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(std::get<CexWord>(found[0].element), (CexWord{0, 1}));
  EXPECT_TRUE(found[0].left_identity);
  EXPECT_FALSE(found[0].right_identity);
  const auto cex = make_counterexample();
  EXPECT_EQ(std::get<CexWord>(cex->compose(CexWord{1, 0}, CexWord{0, 1})), (CexWord{1, 1}));
}

TEST(Idempotents, GroupsOnlyHaveTheIdentity) {
  const auto plane = idempotent_scan(*make_euclidean(2), Sampled{2000, 1});
  ASSERT_EQ(plane.size(), 1u);
  EXPECT_EQ(std::get<RealVector>(plane[0].element), RealVector::zero(2));
  const auto aff = idempotent_scan(*make_affine(), Sampled{2000, 1});
  ASSERT_EQ(aff.size(), 1u);
  EXPECT_EQ(std::get<AffineMap>(aff[0].element), (AffineMap{1, 0}));
  EXPECT_TRUE(aff[0].left_identity && aff[0].right_identity);
}

TEST(Embedding, PositiveRealsGainIdentity) {
  const auto monoid = adjoin_identity(make_positive_reals(), Sampled{10'000, 3});
  ASSERT_TRUE(monoid->identity());
  const auto e = *monoid->identity();
  Rng rng(4);
  const auto base = make_positive_reals();
  for (int i = 0; i < 1000; ++i) {
    const auto x = base->sample(rng);
    const double v = std::get<RealVector>(x)[0];
    EXPECT_EQ(monoid->distance(e, x), v);
    EXPECT_EQ(monoid->distance(x, e), v);
    EXPECT_EQ(std::get<RealVector>(monoid->compose(e, x))[0], v);
    EXPECT_EQ(std::get<RealVector>(monoid->compose(x, e))[0], v);
  }
  EXPECT_TRUE(check_metric_axioms(*monoid, Sampled{10'000, 5}, 1e-9).holds);
  EXPECT_TRUE(check_invariance(*monoid, InvarianceKind::left, Sampled{10'000, 5}, 1e-9).holds);
}

TEST(Embedding, CounterexampleRefusedWithG) {
  try {
    adjoin_identity(make_counterexample());
    FAIL() << "expected IdempotentPresent";
  } catch (const IdempotentPresent& e) {
    EXPECT_FALSE(e.is_identity());
    EXPECT_EQ(std::get<CexWord>(e.witness()), (CexWord{0, 1}));
  }
}

TEST(Embedding, MonoidRefusedWithIdentity) {
  for (const char* name : kGroups) {
    try {
      adjoin_identity(find_instance(name));
      FAIL() << name;
    } catch (const IdempotentPresent& e) {
      EXPECT_TRUE(e.is_identity()) << name;
    }
  }
}

TEST(TwoHomogeneity, AbelianVersusNonabelian) {
  EXPECT_TRUE(two_homogeneity_check(*make_euclidean(2), Sampled{2000, 1}).holds);
  const auto aff = make_affine();
  EXPECT_FALSE(two_homogeneity_check(*aff, Sampled{2000, 1}).holds);
  const AffineMap g{1, 1};
  const auto g2 = aff->compose(g, g);
  EXPECT_EQ(std::get<AffineMap>(g2), (AffineMap{1, 2}));
  const AffineMap e{1, 0};
  EXPECT_NEAR(aff->distance(e, g2), std::acosh(3.0), 1e-14);
  EXPECT_NEAR(aff->distance(e, g), std::acosh(1.5), 1e-14);
  EXPECT_GT(std::fabs(std::acosh(3.0) - 2.0 * std::acosh(1.5)), 0.1);

  const auto h = make_heisenberg();
  EXPECT_FALSE(two_homogeneity_check(*h, Sampled{2000, 1}).holds);
  const HeisenbergPoint p{1, 1, 1};
  const HeisenbergPoint zero{0, 0, 0};
  EXPECT_NEAR(h->distance(zero, h->compose(p, p)), oracle::koranyi({2, 2, 2}), 1e-14);
  EXPECT_GT(std::fabs(oracle::koranyi({2, 2, 2}) - 2.0 * oracle::koranyi({1, 1, 1})), 0.1);
}

TEST(Catalog, LookupAndAnnotations) {
  const auto aff = find_instance("affine");
  EXPECT_TRUE(aff->annotations().left);
  EXPECT_FALSE(aff->annotations().right);
  EXPECT_TRUE(aff->annotations().strong_left);
  EXPECT_THROW(find_instance("no-such"), UnknownName);
  const auto cex = find_instance("counterexample");
  ASSERT_TRUE(cex->sampler_bound());
  EXPECT_GE(*cex->sampler_bound(), 1);
  EXPECT_FALSE(cex->identity());
  EXPECT_EQ(find_instance("euclidean3")->name(), "euclidean3");
  EXPECT_EQ(find_instance("cyclic7")->name(), "cyclic7");
  EXPECT_NE(describe_annotations(cex->annotations()).find("strong-left: no"), std::string::npos);
}

TEST(Codec, RoundTripsSamples) {
  for (const auto& entry : Catalog::builtin().entries()) {
    const auto& inst = *entry.instance;
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      const auto g = inst.sample(rng);
      EXPECT_EQ(inst.decode(inst.encode(g)), g) << inst.encode(g);
    }
  }
}

TEST(Codec, RejectsInvalidElements) {
  EXPECT_THROW(make_affine()->decode("affine:-1,0"), InvalidElement);
  EXPECT_THROW(make_counterexample()->decode("cex:0,0"), InvalidElement);
  EXPECT_THROW(make_cyclic(5)->decode("cyclic5:7"), InvalidElement);
  EXPECT_THROW(make_affine()->compose(AffineMap{1, 0}, RealVector{1}), InvalidElement);
}
