#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fano4/catalog.hpp"
#include "oracles.hpp"

using namespace fano4;

TEST(Catalog, HasSevenRowsOrderedById) {
  const auto rows = catalog();
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(rows[k].id, static_cast<int>(k) + 1);
}

TEST(Catalog, FirstAndLastRows) {
  const auto rows = catalog();
  const auto& z1 = rows[0];
  EXPECT_EQ(z1.index, 2);
  EXPECT_EQ(z1.degree, 1);
  EXPECT_EQ(z1.h12, 21);
  EXPECT_EQ(z1.h0_tangent, 0);
  EXPECT_EQ(z1.h1_tangent, 34);
  EXPECT_EQ(z1.base_locus_H, BaseLocusH::OneSimplePoint);
  EXPECT_EQ(z1.rational, Rationality3::NotRational);

  const auto& z7 = rows[6];
  EXPECT_EQ(z7.index, 4);
  EXPECT_EQ(z7.degree, 1);
  EXPECT_EQ(z7.h12, 0);
  EXPECT_EQ(z7.h0_tangent, 15);
  EXPECT_EQ(z7.h1_tangent, 0);
  EXPECT_EQ(z7.base_locus_H, BaseLocusH::Empty);
  EXPECT_EQ(z7.rational, Rationality3::Rational);

  EXPECT_EQ(rows[5].anticanonical_degree(), 54);
}

TEST(Catalog, CrossIdentities) {
  for (const auto& z : catalog()) {
    SCOPED_TRACE(z.id);
    EXPECT_GE(z.index, 2);
    EXPECT_EQ(2 * (z.h0_tangent - z.h1_tangent), z.index * z.index * z.index * z.degree - 2 * z.h12 - 34);
    EXPECT_EQ(z.base_locus_H == BaseLocusH::OneSimplePoint, z.id == 1);
  }
}

TEST(Catalog, ThreefoldLookupRejectsBadIds) {
  EXPECT_THROW(threefold(0), DomainError);
  EXPECT_THROW(threefold(8), DomainError);
  EXPECT_EQ(threefold(3).degree, 3);
}

TEST(ValidateParams, Examples) {
  EXPECT_TRUE(validate_params(7, 3, 6));
  EXPECT_FALSE(validate_params(1, 1, 1));
  EXPECT_FALSE(oracle::admissible(2, 1, 1));
  EXPECT_FALSE(validate_params(6, 3, 1));
}

TEST(ValidateParams, DomainErrors) {
  EXPECT_THROW(validate_params(0, 0, 1), DomainError);
  EXPECT_THROW(validate_params(8, 0, 1), DomainError);
  EXPECT_THROW(validate_params(7, -1, 1), DomainError);
  EXPECT_THROW(validate_params(7, 0, 0), DomainError);
  EXPECT_THROW(validate_params(7, 0, -3), DomainError);
}

TEST(EnumerateFamilies, CountAndOrder) {
  const auto fams = enumerate_families();
  ASSERT_EQ(fams.size(), 28u);
  EXPECT_TRUE(std::is_sorted(fams.begin(), fams.end()));
  EXPECT_EQ(std::set<FamilyParams>(fams.begin(), fams.end()).size(), fams.size());

  std::map<int, int> per_z;
  for (const auto& p : fams) ++per_z[p.z_id];
  EXPECT_EQ(per_z, (std::map<int, int>{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 6}, {7, 12}}));
}

TEST(EnumerateFamilies, SublistsMatchBruteForce) {
  const auto fams = enumerate_families();
  for (const auto& z : catalog()) {
    std::vector<std::pair<int, int>> got;
    for (const auto& p : fams) {
      if (p.z_id == z.id) got.emplace_back(p.a, p.d);
    }
    EXPECT_EQ(got, oracle::admissible_pairs(z.index, 10, 10)) << "Z_" << z.id;
  }

  std::vector<std::pair<int, int>> z6;
  for (const auto& p : fams) {
    if (p.z_id == 6) z6.emplace_back(p.a, p.d);
  }
  EXPECT_EQ(z6, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 1}, {2, 4}}));
  EXPECT_EQ(oracle::admissible_pairs(2, 10, 10), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(EnumerateFamilies, ExhaustiveGridCrossCheck) {
  const auto fams = enumerate_families();
  const std::set<FamilyParams> listed(fams.begin(), fams.end());
  for (const auto& z : catalog()) {
    for (int a = 0; a <= 4 * z.index; ++a) {
      for (int d = 1; d <= 4 * z.index; ++d) {
        const FamilyParams p{z.id, a, d};
        EXPECT_EQ(validate_params(p), listed.count(p) == 1) << family_label(p);
        EXPECT_EQ(validate_params(p), oracle::admissible(z.index, a, d)) << family_label(p);
      }
    }
  }
  for (const auto& p : fams) EXPECT_LE(p.d, 2 * p.z().index - 2);
}

TEST(FamilyLabel, Format) {
  EXPECT_EQ(family_label({7, 3, 6}), "X^7_{3,6}");
  EXPECT_EQ(family_label({1, 0, 1}), "X^1_{0,1}");
}
