#include <gtest/gtest.h>

#include "fano4/catalog.hpp"
#include "fano4/classify.hpp"
#include "oracles.hpp"

using namespace fano4;

TEST(BaseLocus, Examples) {
  EXPECT_EQ(base_locus({1, 0, 1}).kind, BaseLocusKind::OnePoint);
  EXPECT_EQ(base_locus({1, 1, 2}).kind, BaseLocusKind::TwoPoints);
  EXPECT_EQ(base_locus({4, 0, 1}).kind, BaseLocusKind::Empty);
  EXPECT_EQ(base_locus_points(BaseLocusKind::TwoPoints), "{Q_1, Q_2}");
  for (const auto& p : enumerate_families()) {
    const auto b = base_locus(p);
    EXPECT_TRUE(b.general_member_smooth);
    EXPECT_EQ(b.kind != BaseLocusKind::Empty, p.z_id == 1) << family_label(p);
  }
}

TEST(Rationality, Examples) {
  EXPECT_EQ(rationality({3, 1, 2}), Rationality::Unknown);
  EXPECT_EQ(rationality({7, 2, 1}), Rationality::Toric);
  EXPECT_EQ(toric_label({7, 2, 1}), ToricLabel::E2);
  EXPECT_EQ(toric_label({7, 0, 1}), ToricLabel::E3);
  EXPECT_EQ(toric_label({7, 3, 1}), ToricLabel::E1);
  EXPECT_EQ(toric_label({7, 1, 2}), std::nullopt);
  EXPECT_EQ(rationality({2, 0, 1}), Rationality::VeryGeneralNotRational);
  EXPECT_TRUE(is_rational(Rationality::Toric));
  EXPECT_FALSE(is_rational(Rationality::Unknown));
}

TEST(Rationality, ToricOnlyOverP3WithDOne) {
  int toric = 0;
  for (const auto& p : enumerate_families()) {
    const bool t = rationality(p) == Rationality::Toric;
    EXPECT_EQ(t, p.z_id == 7 && p.d == 1) << family_label(p);
    toric += t;
  }
  EXPECT_EQ(toric, 3);
}

TEST(H0LineBundle, Examples) {
  EXPECT_EQ(h0_line_bundle(threefold(7), 1), 4);
  EXPECT_EQ(h0_line_bundle(threefold(6), 2), 14);
  EXPECT_EQ(h0_line_bundle(threefold(1), 1), 3);
  EXPECT_THROW(h0_line_bundle(threefold(1), 0), DomainError);
}

TEST(H0LineBundle, MatchesMonomialCounts) {
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(h0_line_bundle(threefold(7), d), oracle::h0_p3(d)) << d;
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(h0_line_bundle(threefold(6), d), oracle::h0_quadric(d)) << d;
}

TEST(ChiTangent, Examples) {
  const auto chi = [](FamilyParams p) {
    return chi_tangent(fano4_invariants(p), hodge_of_X(p.z(), p.a, p.d));
  };
  EXPECT_EQ(chi({7, 0, 1}), 14);
  EXPECT_EQ(chi({1, 1, 2}), -39);
  EXPECT_EQ(chi({6, 2, 4}), -43);
}

TEST(TangentBounds, Examples) {
  const auto t1 = tangent_bounds({1, 0, 1}, -34);
  EXPECT_EQ(t1.h1_exact, 36);
  EXPECT_EQ(t1.h0_exact, 2);

  const auto t7 = tangent_bounds({7, 3, 2}, 11);
  EXPECT_EQ(t7.h1_exact, 0);
  EXPECT_EQ(t7.h0_exact, 11);
  EXPECT_EQ(t7.h1_upper, 0);
  EXPECT_EQ(t7.h1_deformation_bound, 9);

  const auto t5 = tangent_bounds({5, 0, 1}, -1);
  EXPECT_EQ(t5.h1_upper, 6);
  EXPECT_EQ(t5.h0_upper, 5);
  EXPECT_FALSE(t5.h1_exact.has_value());
  EXPECT_FALSE(t5.h0_exact.has_value());
}

TEST(TangentBounds, Invariants) {
  for (const auto& p : enumerate_families()) {
    SCOPED_TRACE(family_label(p));
    const auto chi = chi_tangent(fano4_invariants(p), hodge_of_X(p.z(), p.a, p.d));
    const auto t = tangent_bounds(p, chi);
    EXPECT_EQ(t.h0_upper - t.h1_upper, chi);
    EXPECT_LE(t.h1_upper, t.h1_deformation_bound);
    EXPECT_GE(t.h0_upper, 0);
    EXPECT_EQ(t.h1_exact.has_value(), t.h0_exact.has_value());
    if (t.h1_exact) {
      EXPECT_EQ(*t.h1_exact, t.h1_upper);
    }
    if (t.h0_exact) {
      EXPECT_EQ(*t.h0_exact, t.h0_upper);
    }
    EXPECT_EQ(t.h1_exact.has_value(), p.z_id <= 4 || (p.z_id == 7 && p.d <= 2));
  }
}

TEST(TangentBounds, NegativeBoundIsAnIntegrityError) {
  EXPECT_THROW(tangent_bounds({7, 0, 1}, -100), IntegrityError);
}
