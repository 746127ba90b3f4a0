#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

#include "dioph/family.hpp"
#include "dioph/int_poly.hpp"
#include "oracles.hpp"

using dioph::BigInt;
using dioph::IntPoly;

TEST(IntPoly, Basics) {
  const IntPoly p{-1, 0, 2, 0, 0};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.l1_norm(), 3);
  EXPECT_EQ(p.max_abs_coeff(), 2);
  EXPECT_EQ(p.leading(), 2);
  EXPECT_TRUE(IntPoly{}.is_zero());
  EXPECT_EQ(IntPoly{}.degree(), IntPoly::kZeroDegree);
  EXPECT_EQ((IntPoly{1, 1} * IntPoly{-1, 1}), (IntPoly{-1, 0, 1}));
  EXPECT_EQ((IntPoly{1, 1} - IntPoly{1, 1}), IntPoly{});
  EXPECT_EQ(IntPoly({0, 0, 3}).low_order(), 2);
  EXPECT_EQ(IntPoly({3, -2, 1}).derivative(), (IntPoly{-2, 2}));
  EXPECT_EQ(dioph::sup_distance(IntPoly{1, 5}, IntPoly{-2, 5, 1}), 3);
}

TEST(IntPoly, FamilyMembership) {
  EXPECT_TRUE(IntPoly({1, 0, 0, 0, 1}).in_family(2));
  EXPECT_FALSE(IntPoly({1, 0, 0, 0, 0, 1}).in_family(2));
  EXPECT_FALSE(IntPoly({2, 1}).in_family(2));
  EXPECT_TRUE(IntPoly{}.in_family(0));
}

TEST(Family, LevelOne) {
  const auto f = dioph::enumerate_family(1);
  const std::set<IntPoly> got(f.begin(), f.end());
  const std::set<IntPoly> expect = {IntPoly{},      IntPoly{1},       IntPoly{-1},
                                    IntPoly{0, 1},  IntPoly{0, -1},   IntPoly{0, 0, 1},
                                    IntPoly{0, 0, -1}};
  EXPECT_EQ(f.size(), 7u);
  EXPECT_EQ(got, expect);
  EXPECT_TRUE(f.front().is_zero());
}

TEST(Family, CountsMatchLatticeAndAreDistinct) {
  for (int l = 0; l <= 5; ++l) {
    const auto f = dioph::enumerate_family(l);
    std::unordered_set<IntPoly, dioph::IntPolyHash> seen(f.begin(), f.end());
    EXPECT_EQ(seen.size(), f.size());
    EXPECT_EQ(BigInt(f.size()), dioph::count_l1_ball(2 * l + 1, l));
    for (const auto& p : f) ASSERT_TRUE(p.in_family(l));
    BigInt hundred = 1;
    for (int i = 0; i < l; ++i) hundred *= 100;
    EXPECT_LE(dioph::count_l1_ball(2 * l + 1, l), dioph::family_size_bound(l));
    if (l >= 1) EXPECT_LE(dioph::family_size_bound(l), hundred);
  }
}

TEST(Family, OrderIsStable) {
  dioph::FamilyEnumerator a(3);
  const auto all = dioph::enumerate_family(3);
  std::size_t i = 0;
  while (auto p = a.next()) ASSERT_EQ(*p, all[i++]);
  EXPECT_EQ(i, all.size());
}

TEST(Family, CapRejected) {
  EXPECT_THROW(dioph::FamilyEnumerator(8), std::exception);
  EXPECT_THROW(dioph::enumerate_family(4, 3), std::exception);
}

TEST(CountL1Ball, Examples) {
  EXPECT_EQ(dioph::count_l1_ball(1, 3), 7);
  EXPECT_EQ(dioph::count_l1_ball(5, 2), 61);
  EXPECT_EQ(dioph::count_l1_ball(11, 0), 1);
  EXPECT_EQ(dioph::count_l1_ball(3, 0), 1);
}

TEST(CountL1Ball, MatchesBoxEnumeration) {
  for (int dim = 1; dim <= 5; ++dim) {
    for (int radius = 0; radius <= 4; ++radius) {
      EXPECT_EQ(dioph::count_l1_ball(dim, radius), oracle::l1_box_count(dim, radius))
          << dim << " " << radius;
    }
  }
}

TEST(Quantize, NearestIntegerTiesRoundDown) {
  EXPECT_EQ(dioph::nearest_integer_half_down(0.5), 0);
  EXPECT_EQ(dioph::nearest_integer_half_down(1.5), 1);
  EXPECT_EQ(dioph::nearest_integer_half_down(-0.5), -1);
  EXPECT_EQ(dioph::nearest_integer_half_down(0.51), 1);
  EXPECT_EQ(dioph::nearest_integer_half_down(-1.49), -1);
}

TEST(Quantize, Examples) {
  const auto z = dioph::quantize(IntPoly{}, 2, 1);
  EXPECT_EQ(z.entries, std::vector<std::int64_t>(5, 0));

  // Unit scale leaves coefficients unchanged; entries run from x^{2l} down.
  const auto q = dioph::quantize_coefficients(IntPoly{-1, 1}, 5, 1.0);
  EXPECT_EQ(q.entries, (std::vector<std::int64_t>{0, 0, 0, 1, -1}));

  const auto big = dioph::quantize_coefficients(IntPoly{5, 5}, 3, std::exp(10.0));
  EXPECT_EQ(big.entries, (std::vector<std::int64_t>{0, 0, 0}));
}

TEST(Quantize, NormBound) {
  for (int l = 1; l <= 5; ++l) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& p : dioph::enumerate_family(l)) {
        const auto q = dioph::quantize(p, l, k);
        ASSERT_EQ(q.entries.size(), static_cast<std::size_t>(2 * l + 1));
        EXPECT_LE(static_cast<double>(q.l1_norm()), 2.0 * p.l1_norm() / q.K);
      }
    }
  }
}

TEST(Quantize, SeparatedPairsMapApart) {
  std::mt19937_64 rng(23);
  const double K = 7.5;
  for (int t = 0; t < 2000; ++t) {
    std::vector<std::int64_t> a(6), b(6);
    for (auto& c : a) c = static_cast<std::int64_t>(rng() % 81) - 40;
    b = a;
    const std::size_t i = rng() % 6;
    const std::int64_t jump = static_cast<std::int64_t>(std::ceil(K)) + 1 +
                              static_cast<std::int64_t>(rng() % 10);
    b[i] += (rng() & 1) ? jump : -jump;
    const auto qa = dioph::quantize_coefficients(IntPoly(a), 6, K);
    const auto qb = dioph::quantize_coefficients(IntPoly(b), 6, K);
    EXPECT_NE(qa, qb);
  }
}

TEST(QuantizedClassBound, Examples) {
  const auto b = dioph::quantized_class_bound(5, 1);
  EXPECT_EQ(b.radius, 0);
  EXPECT_EQ(b.exact, 1);
  for (int l = 1; l <= 7; ++l) {
    for (int k = 1; k <= 3; ++k) {
      const auto c = dioph::quantized_class_bound(l, k);
      EXPECT_EQ(c.exact, 1);
      EXPECT_TRUE(c.constant_inequality_holds);
      EXPECT_GE(c.final_bound, c.exact.convert_to<double>());
      EXPECT_GE(c.closed_form, 1.0);
    }
  }
}
