#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fano4/catalog.hpp"
#include "fano4/cones.hpp"
#include "fano4/linalg.hpp"

using namespace fano4;
using enum CurveGenerator;

namespace {

const FamilyParams kX7_0_1{7, 0, 1};
const FamilyParams kX7_1_2{7, 1, 2};
const FamilyParams kX7_2_5{7, 2, 5};
const FamilyParams kX6_2_4{6, 2, 4};

}  // namespace

TEST(AlternateBasis, Examples) {
  for (const auto& p : enumerate_families()) {
    const int i = p.z().index;
    const DivisorClass k{{i - p.a, 2, 1}, p};
    EXPECT_EQ(to_alternate_basis(k), (Coords3{i + p.a - p.d, 2, 1})) << family_label(p);
    EXPECT_EQ(to_alternate_basis(DivisorClass{{1, 0, 0}, p}), (Coords3{1, 0, 0}));
  }
  EXPECT_EQ(to_alternate_basis(DivisorClass{{0, 1, 1}, kX7_1_2}), (Coords3{1, 1, 0}));
}

TEST(AlternateBasis, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  const auto fams = enumerate_families();
  for (int trial = 0; trial < 500; ++trial) {
    const auto& p = fams[static_cast<std::size_t>(trial) % fams.size()];
    const DivisorClass D{{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                          Rational(num(rng), den(rng))},
                         p};
    EXPECT_EQ(from_alternate_basis(to_alternate_basis(D), p), D);
  }
}

TEST(Anticanonical, Examples) {
  EXPECT_EQ(anticanonical({7, 3, 1}).coords(), (Coords3{1, 2, 1}));
  EXPECT_EQ(anticanonical({1, 0, 1}).coords(), (Coords3{2, 2, 1}));
}

TEST(Pairing, Examples) {
  for (const auto& p : enumerate_families()) {
    SCOPED_TRACE(family_label(p));
    EXPECT_EQ(pairing(divisors::E(p), F), Rational(-1));
    EXPECT_EQ(pairing(divisors::G_hat(p), CGHat), Rational(p.a - p.d));
    EXPECT_EQ(pairing(anticanonical(p), CG), Rational(p.z().index - p.a));
    EXPECT_GE(pairing(anticanonical(p), CG), Rational(1));
  }
}

TEST(Pairing, GeometricAnchors) {
  for (const auto& p : enumerate_families()) {
    SCOPED_TRACE(family_label(p));
    // the centre lies on G, so both G^ and G meet the fibre over it once
    EXPECT_EQ(pairing(divisors::G_hat(p), F), Rational(1));
    EXPECT_EQ(pairing(divisors::G(p), FHat), Rational(1));
    EXPECT_EQ(pairing(divisors::G_hat(p), FHat), Rational(0));
    EXPECT_EQ(pairing(divisors::E(p), FHat), Rational(1));
    // normal bundle of G in Y is O_Z(-a), that of E^ restricted to F^ is -1
    EXPECT_EQ(pairing(divisors::G(p), CG), Rational(-p.a));
    EXPECT_EQ(pairing(divisors::E_hat(p), FHat), Rational(-1));
    EXPECT_EQ(pairing(divisors::pullback_H(p), CG), Rational(1));
  }
}

TEST(Pairing, LinearEquivalenceRelation) {
  using namespace divisors;
  for (const auto& p : enumerate_families()) {
    const Rational a(p.a), d(p.d);
    EXPECT_EQ(d * G(p) + a * E_hat(p), d * G_hat(p) + (d - a) * E(p)) << family_label(p);
    EXPECT_EQ(G(p) + a * pullback_H(p), G_hat(p) + E(p)) << family_label(p);
  }
}

TEST(Pairing, MatrixRankAndKernel) {
  for (const auto& p : enumerate_families()) {
    SCOPED_TRACE(family_label(p));
    const auto m = pairing_matrix(p);
    EXPECT_EQ(linalg::rank(m), 3u);
    const auto ker = linalg::kernel(m, 4);
    ASSERT_EQ(ker.size(), 1u);
    const std::array<Rational, 4> expected{p.a - p.d, p.a, 1, -1};
    // scale so the C_G coordinate is 1
    const auto& v = ker[0];
    ASSERT_NE(v[2], Rational(0));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(v[k] / v[2], expected[k]);
  }
}

TEST(Pairing, CurveRelationHolds) {
  // C_G^ = C_G + (a-d) F + a F^ numerically
  for (const auto& p : enumerate_families()) {
    for (const auto& D : {divisors::pullback_H(p), divisors::G_hat(p), divisors::E(p)}) {
      EXPECT_EQ(pairing(D, CGHat), pairing(D, CG) + Rational(p.a - p.d) * pairing(D, F) +
                                       Rational(p.a) * pairing(D, FHat));
    }
  }
}

TEST(Pairing, ContextMismatch) {
  const auto D = divisors::E(kX7_0_1);
  EXPECT_THROW(D + divisors::E(kX6_2_4), ContextMismatchError);
  EXPECT_THROW(pairing(D, CurveClass::generator(F, kX6_2_4)), ContextMismatchError);
  EXPECT_THROW(CurveClass({-1, 0, 0, 0}, kX7_0_1), DomainError);
}

TEST(NeGenerators, Examples) {
  EXPECT_EQ(ne_generator_kinds({7, 0, 3}), (std::vector<CurveGenerator>{F, FHat, CGHat}));
  EXPECT_EQ(ne_generators({7, 1, 4}).size(), 4u);
  EXPECT_EQ(ne_generator_kinds({6, 2, 1}), (std::vector<CurveGenerator>{F, FHat, CG}));
  EXPECT_EQ(ne_generators({6, 2, 1})[2].as_generator(), CG);
}

TEST(NefRays, Examples) {
  const auto r = nef_rays(kX7_0_1);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].generator, divisors::pullback_H(kX7_0_1));
  EXPECT_EQ(r[1].generator, divisors::G(kX7_0_1));
  EXPECT_EQ(r[2].generator, divisors::G(kX7_0_1) + divisors::E_hat(kX7_0_1));
  EXPECT_EQ(r[0].contraction, ContractionType::FibreType);
  EXPECT_EQ(r[1].contraction, ContractionType::Divisorial);

  const auto r2 = nef_rays(kX7_2_5);
  ASSERT_EQ(r2.size(), 4u);
  const auto target = Rational(5) * divisors::G(kX7_2_5) + Rational(2) * divisors::E_hat(kX7_2_5);
  EXPECT_TRUE(std::any_of(r2.begin(), r2.end(), [&](const NefRay& n) { return n.generator == target; }));
  EXPECT_EQ(r2[3].label, NefRayLabel::R4);
  EXPECT_EQ(r2[3].vanishing_face, (std::vector<CurveGenerator>{CG, CGHat}));

  const auto r3 = nef_rays({7, 3, 1});
  ASSERT_EQ(r3.size(), 3u);
  EXPECT_EQ(r3[2].generator, divisors::G_hat({7, 3, 1}));
}

TEST(NefRays, DualityAndTwoFaces) {
  for (const auto& p : enumerate_families()) {
    SCOPED_TRACE(family_label(p));
    const auto ne = ne_generator_kinds(p);
    const auto rays = nef_rays(p);
    EXPECT_EQ(rays.size(), ne.size());
    for (const auto& r : rays) {
      EXPECT_TRUE(is_nef(r.generator));
      EXPECT_FALSE(is_ample(r.generator));
      EXPECT_EQ(r.vanishing_face.size(), 2u);
      for (auto g : ne) {
        const bool on_face = std::find(r.vanishing_face.begin(), r.vanishing_face.end(), g) !=
                             r.vanishing_face.end();
        EXPECT_EQ(pairing(r.generator, g) == Rational(0), on_face);
        EXPECT_GE(pairing(r.generator, g), Rational(0));
      }
    }
    // every NE generator spans a facet: it is orthogonal to exactly two rays
    for (auto g : ne) {
      const auto n = std::count_if(rays.begin(), rays.end(), [&](const NefRay& r) {
        return pairing(r.generator, g) == Rational(0);
      });
      EXPECT_EQ(n, 2);
    }
  }
}

TEST(IsFano, Examples) {
  EXPECT_TRUE(is_fano(kX6_2_4));
  const auto k = anticanonical(kX6_2_4);
  Rational lo = pairing(k, F);
  for (auto g : ne_generator_kinds(kX6_2_4)) lo = std::min(lo, pairing(k, g));
  EXPECT_EQ(lo, Rational(1));
  EXPECT_EQ(pairing(k, CG), Rational(1));

  EXPECT_FALSE(is_fano({7, 4, 1}));
  for (const auto& p : enumerate_families()) EXPECT_TRUE(is_fano(p)) << family_label(p);
  EXPECT_THROW(is_fano({7, -1, 1}), DomainError);
  EXPECT_THROW(is_fano({7, 0, 0}), DomainError);
}

TEST(IsFano, MatchesInequalitiesOnGrid) {
  for (const auto& z : catalog()) {
    for (int a = 0; a <= 10; ++a) {
      for (int d = 1; d <= 10; ++d) {
        const FamilyParams p{z.id, a, d};
        EXPECT_EQ(is_fano(p), a <= z.index - 1 && d - a <= z.index - 1) << family_label(p);
      }
    }
  }
}

TEST(FibreLike, Examples) {
  EXPECT_EQ(is_fibre_like(kX7_1_2), FibreLikeness::Undetermined);
  EXPECT_EQ(is_fibre_like(kX7_0_1), FibreLikeness::NotFibreLike);
  EXPECT_EQ(is_fibre_like(kX6_2_4), FibreLikeness::Undetermined);
}
