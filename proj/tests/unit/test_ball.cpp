#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "dioph/ball.hpp"
#include "dioph/errors.hpp"
#include "oracles.hpp"

using dioph::Complex;
using dioph::WordForm;

namespace {

std::set<oracle::LaurentMatrix> as_oracle(const dioph::Ball& ball) {
  std::set<oracle::LaurentMatrix> out;
  for (const auto& w : ball.forms) {
    oracle::LaurentMatrix m{w.k(), {}};
    for (auto [e, c] : w.terms()) m.b[e] = c;
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST(EnumerateBall, SmallSizes) {
  EXPECT_EQ(dioph::enumerate_ball(0).size(), 1u);
  const auto b1 = dioph::enumerate_ball(1);
  ASSERT_EQ(b1.size(), 5u);
  const std::set<WordForm> expect = {WordForm::identity(), WordForm(1, {}, 1),
                                     WordForm(-1, {}, 1), WordForm(0, {{0, 1}}, 1),
                                     WordForm(0, {{0, -1}}, 1)};
  EXPECT_EQ(std::set<WordForm>(b1.forms.begin(), b1.forms.end()), expect);
}

TEST(EnumerateBall, MatchesNaiveProducts) {
  for (int l = 0; l <= 6; ++l) {
    const auto ball = dioph::enumerate_ball(l);
    const auto naive = oracle::all_products(l);
    EXPECT_EQ(ball.size(), naive.size()) << "l = " << l;
    EXPECT_EQ(as_oracle(ball), naive) << "l = " << l;
  }
}

TEST(EnumerateBall, KnownGrowth) {
  const std::size_t sizes[] = {1, 5, 17, 53, 153, 421, 1125, 2937, 7537};
  const auto ball = dioph::enumerate_ball(8);
  for (int m = 0; m <= 8; ++m) EXPECT_EQ(ball.count_within(m), sizes[m]);
}

TEST(EnumerateBall, Nested) {
  std::set<WordForm> prev;
  for (int l = 0; l <= 8; ++l) {
    const auto ball = dioph::enumerate_ball(l);
    const std::set<WordForm> cur(ball.forms.begin(), ball.forms.end());
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    EXPECT_LE(ball.size(), dioph::word_count(l));
    prev = cur;
  }
}

TEST(EnumerateBall, ThreadCountDoesNotChangeResult) {
  dioph::BallOptions one;
  one.threads = 1;
  dioph::BallOptions four;
  four.threads = 4;
  four.shards = 7;
  EXPECT_EQ(dioph::enumerate_ball(7, one).forms, dioph::enumerate_ball(7, four).forms);
}

TEST(EnumerateBall, CapRaisesResourceLimit) {
  dioph::BallOptions o;
  o.cap = 4;
  try {
    dioph::enumerate_ball(5, o);
    FAIL() << "expected ResourceLimitError";
  } catch (const dioph::ResourceLimitError& e) {
    EXPECT_GT(e.estimated_count(), 0u);
  }
  o.cap = 12;
  o.max_forms = 100;
  EXPECT_THROW(dioph::enumerate_ball(6, o), dioph::ResourceLimitError);
}

TEST(WordGap, LengthOneAtTwo) {
  const auto s = dioph::word_gap(Complex(2, 0), 1);
  EXPECT_DOUBLE_EQ(s.d_l, 0.5);
  EXPECT_EQ(s.argmin_word, WordForm(-1, {}, 1));
  EXPECT_EQ(s.distinct_elements, 5u);
  EXPECT_EQ(s.words, 5u);
}

TEST(WordGap, DyadicLowerBoundAtTwo) {
  const auto ball = dioph::enumerate_ball(8);
  for (const auto& w : ball.forms) {
    if (w.k() != 0 || w.b_is_zero()) continue;
    const double v = std::abs(dioph::evaluate(w, Complex(2, 0)).b);
    if (v == 0.0) continue;
    EXPECT_GE(v, std::ldexp(1.0, -w.length_bound()));
  }
}

TEST(WordGap, BruteForceAtOneAndAHalf) {
  const Complex x(1.5, 0);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : oracle::all_products(4)) {
    if (m.k == 0 && m.b.empty()) continue;
    Complex b(0, 0);
    for (auto [e, c] : m.b) b += static_cast<double>(c) * std::pow(x, e);
    const double d = std::max(std::abs(std::pow(x, m.k) - 1.0), std::abs(b));
    best = std::min(best, d);
  }
  EXPECT_NEAR(dioph::word_gap(x, 4).d_l, best, 1e-14);
}

TEST(WordGap, Monotone) {
  const auto ball = dioph::enumerate_ball(8);
  const Complex xs[] = {{2, 0}, {1.5, 0}, {1.1, 0.3}, {-1.7, 0.2}, {0, 2.5}, {3, 0}};
  for (Complex x : xs) {
    const auto prof = dioph::gap_profile(ball, x);
    ASSERT_EQ(prof.size(), 9u);
    for (std::size_t l = 1; l < prof.size(); ++l) EXPECT_LE(prof[l].d_l, prof[l - 1].d_l);
  }
}

TEST(WordGap, RejectsUnitDisk) {
  EXPECT_THROW(dioph::word_gap(Complex(1, 0), 2), dioph::DomainError);
  EXPECT_THROW(dioph::word_gap(Complex(0.3, 0.4), 2), dioph::DomainError);
}

TEST(WordGap, RelationAtTwoIsExact) {
  dioph::GapOptions gap;
  gap.exact_x = dioph::GaussianRational::parse("2");
  const auto s4 = dioph::word_gap(Complex(2, 0), 4, gap);
  EXPECT_FALSE(s4.relation_witness.has_value());
  const auto s5 = dioph::word_gap(Complex(2, 0), 5, gap);
  ASSERT_TRUE(s5.relation_witness.has_value());
  EXPECT_TRUE(s5.relation_exact);
  EXPECT_EQ(s5.relation_witness->k(), 0);
  EXPECT_GT(s5.d_l, 0.0);
}

TEST(WordGap, NumericRelationWithoutExactX) {
  const auto s = dioph::word_gap(Complex(2, 0), 5);
  ASSERT_TRUE(s.relation_witness.has_value());
  EXPECT_FALSE(s.relation_exact);
}

TEST(BetaProfile, IntegerParameter) {
  dioph::GapOptions gap;
  gap.exact_x = dioph::GaussianRational::parse("3");
  // x - 3 needs six letters (g1 g2 g1^-1 g2^-3), so shorter words are free.
  const auto short_run = dioph::beta_profile(Complex(3, 0), 5, gap);
  EXPECT_FALSE(short_run.relation_found);
  const auto r = dioph::beta_profile(Complex(3, 0), 8, gap);
  EXPECT_TRUE(r.relation_found);
  EXPECT_TRUE(r.per_l[6].relation_exact);
  EXPECT_TRUE(std::isfinite(r.beta_estimate));
  EXPECT_GE(r.beta_estimate, 0.0);
  ASSERT_EQ(r.beta_l.size(), 9u);
  for (std::size_t l = 1; l < r.beta_l.size(); ++l) {
    const auto& s = r.per_l[l];
    EXPECT_GT(s.d_l, 0.0);
    EXPECT_NEAR(r.beta_l[l], std::log(1.0 / s.d_l) / std::log(double(s.distinct_elements)),
                1e-12);
    EXPECT_LE(r.beta_l[l], r.beta_estimate);
  }
  EXPECT_GE(r.beta_estimate, r.beta_estimate_words);
}

TEST(BetaProfile, GoldenDirection) {
  const double phi = std::numbers::phi;
  const Complex x = std::polar(1.2, phi);
  const auto r = dioph::beta_profile(x, 7);
  EXPECT_TRUE(std::isfinite(r.beta_estimate));
  for (std::size_t l = 1; l < r.per_l.size(); ++l) EXPECT_TRUE(std::isfinite(r.per_l[l].d_l));
}

TEST(AbelianGap, Examples) {
  EXPECT_DOUBLE_EQ(dioph::abelian_gap(0.5, 1).value, 0.5);
  const auto g = dioph::abelian_gap(0.5, 3);
  EXPECT_EQ(g.value, 0.0);
  EXPECT_EQ(g.m, 2);
  EXPECT_EQ(g.n, -1);
  const double x = 1.0 / std::numbers::sqrt2;
  const auto h = dioph::abelian_gap(x, 10);
  const auto b = oracle::abelian_brute(x, 10);
  EXPECT_EQ(h.value, b.value);
  EXPECT_EQ(h.m, b.m);
  EXPECT_EQ(h.n, b.n);
}

TEST(AbelianGap, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const double x = u(rng);
    const long long l = 1 + static_cast<long long>(rng() % 60);
    const auto h = dioph::abelian_gap(x, l);
    const auto b = oracle::abelian_brute(x, l);
    EXPECT_EQ(h.value, b.value) << x << " " << l;
    EXPECT_EQ(h.m, b.m);
    EXPECT_EQ(h.n, b.n);
  }
}

TEST(AbelianGap, MatchesContinuedFractions) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const double x = u(rng);
    const long long l = 1 + static_cast<long long>(rng() % 1000);
    const auto h = dioph::abelian_gap(x, l);
    const auto c = oracle::abelian_continued_fraction(x, l);
    EXPECT_EQ(h.value, c.value) << x << " " << l;
    EXPECT_EQ(h.m, c.m);
    EXPECT_EQ(h.n, c.n);
  }
}

TEST(AbelianGap, RationalTiesPickSmallestM) {
  const auto g = dioph::abelian_gap(0.25, 20);
  EXPECT_EQ(g.value, 0.0);
  EXPECT_EQ(g.m, 4);
  EXPECT_EQ(g.n, -1);
  const auto c = oracle::abelian_continued_fraction(0.25, 20);
  EXPECT_EQ(c.m, 4);
  EXPECT_EQ(c.n, -1);
}
