#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "dioph/affine.hpp"
#include "dioph/ball.hpp"
#include "dioph/errors.hpp"
#include "dioph/gaussian_rational.hpp"
#include "oracles.hpp"

using dioph::Complex;
using dioph::Generator;
using dioph::Side;
using dioph::WordForm;

namespace {

std::vector<Generator> to_generators(const std::vector<int>& word) {
  std::vector<Generator> out;
  for (int s : word) out.push_back(dioph::kAlphabet[static_cast<std::size_t>(s)]);
  return out;
}

}  // namespace

TEST(Evaluate, EmptyWordIsIdentity) {
  const auto g = dioph::evaluate(WordForm::identity(), Complex(2, 0));
  EXPECT_EQ(g.a, Complex(1, 0));
  EXPECT_EQ(g.b, Complex(0, 0));
}

TEST(Evaluate, TranslationThenDilation) {
  const WordForm w(1, {{0, 1}}, 2);
  const auto g = dioph::evaluate(w, Complex(3, 0));
  EXPECT_EQ(g.a, Complex(3, 0));
  EXPECT_EQ(g.b, Complex(1, 0));
  const auto m = oracle::matrix_product({1, 0}, Complex(3, 0));
  EXPECT_EQ(m[0], g.a);
  EXPECT_EQ(m[1], g.b);
}

TEST(Evaluate, Commutator) {
  const WordForm w(0, {{1, 1}, {0, -1}}, 4);
  const auto g = dioph::evaluate(w, Complex(1.5, 0));
  EXPECT_EQ(g.a, Complex(1, 0));
  EXPECT_DOUBLE_EQ(g.b.real(), 0.5);
  const std::vector<Generator> word = {Generator::kG1, Generator::kG2, Generator::kG1Inv,
                                       Generator::kG2Inv};
  EXPECT_EQ(dioph::word_to_form(word), w);
  EXPECT_EQ(dioph::word_to_form(word, Side::kRight), w);
  EXPECT_DOUBLE_EQ(dioph::distance_to_identity(g), 0.5);
}

TEST(Evaluate, RejectsZero) {
  EXPECT_THROW(dioph::evaluate(WordForm(0, {{-1, 1}}, 1), Complex(0, 0)), dioph::DomainError);
}

TEST(ApplyGenerator, Examples) {
  const auto t = dioph::apply_generator(WordForm::identity(), Generator::kG2, Side::kLeft);
  EXPECT_EQ(t, WordForm(0, {{0, 1}}, 1));
  EXPECT_EQ(t.length_bound(), 1);

  const auto u = dioph::apply_generator(WordForm(1, {{0, 1}}, 2), Generator::kG1Inv, Side::kLeft);
  EXPECT_EQ(u, WordForm(0, {{-1, 1}}, 3));
  EXPECT_DOUBLE_EQ(dioph::evaluate(u, Complex(2, 0)).b.real(), 0.5);

  const auto v = dioph::apply_generator(WordForm(0, {{0, 1}}, 1), Generator::kG1, Side::kRight);
  EXPECT_EQ(v, WordForm(1, {{0, 1}}, 2));
}

TEST(ApplyGenerator, RightTranslationUsesCurrentPower) {
  const auto w = dioph::apply_generator(WordForm(2, {}, 2), Generator::kG2Inv, Side::kRight);
  EXPECT_EQ(w, WordForm(2, {{2, -1}}, 3));
}

TEST(ApplyGenerator, InverseCancels) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Generator> word;
    const int len = static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) word.push_back(dioph::kAlphabet[rng() % 4]);
    const WordForm w = dioph::word_to_form(word);
    for (Generator s : dioph::kAlphabet) {
      for (Side side : {Side::kLeft, Side::kRight}) {
        const auto back = dioph::apply_generator(dioph::apply_generator(w, s, side),
                                                 dioph::inverse(s), side);
        EXPECT_EQ(back.k(), w.k());
        EXPECT_EQ(back.terms(), w.terms());
      }
    }
  }
}

TEST(Distance, Examples) {
  EXPECT_EQ(dioph::distance_to_identity(dioph::AffineElement{}), 0.0);
  EXPECT_DOUBLE_EQ(dioph::distance_to_identity(dioph::AffineElement{{3, 0}, {1, 0}}), 2.0);
}

TEST(WordFormInvariants, ConstructorRejectsOutOfBounds) {
  EXPECT_THROW(WordForm(3, {}, 2), std::invalid_argument);
  EXPECT_THROW(WordForm(0, {{3, 1}}, 2), std::invalid_argument);
  EXPECT_THROW(WordForm(0, {{0, 2}, {1, 1}}, 2), std::invalid_argument);
  EXPECT_NO_THROW(WordForm(0, {{0, 2}}, 2));
}

TEST(WordFormInvariants, BoundsHoldOnEveryWordUpToEight) {
  std::vector<WordForm> frontier = {WordForm::identity()};
  for (int l = 1; l <= 8; ++l) {
    std::vector<WordForm> next;
    next.reserve(frontier.size() * 4);
    for (const auto& w : frontier) {
      for (Generator s : dioph::kAlphabet) {
        WordForm v = dioph::apply_generator(w, s, Side::kLeft);
        ASSERT_TRUE(v.satisfies_bounds(l)) << dioph::to_json(v);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  EXPECT_EQ(frontier.size(), 65536u);
}

TEST(Homomorphism, FormMatchesMatrixProduct) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mod(1.1, 5.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<int> word;
    const int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % 4));
    const Complex x = std::polar(mod(rng), ang(rng));
    const auto gens = to_generators(word);
    const auto m = oracle::matrix_product(word, x);
    for (Side side : {Side::kLeft, Side::kRight}) {
      const auto g = dioph::evaluate(dioph::word_to_form(gens, side), x);
      const double scale = std::max({1.0, std::abs(m[0]), std::abs(m[1])});
      EXPECT_LE(std::max(std::abs(g.a - m[0]), std::abs(g.b - m[1])) / scale, 1e-10);
    }
  }
}

TEST(Homomorphism, FormMatchesOracleExactly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> word;
    const int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % 4));
    const auto o = oracle::product(word);
    const WordForm w = dioph::word_to_form(to_generators(word));
    EXPECT_EQ(w.k(), o.k);
    std::vector<std::pair<int, std::int64_t>> expect(o.b.begin(), o.b.end());
    EXPECT_EQ(w.terms(), expect);
  }
}

TEST(Serialization, RoundTrip) {
  const WordForm w(-2, {{-2, 1}, {0, -3}, {1, 1}}, 6);
  const auto text = dioph::to_json(w);
  const WordForm back = dioph::word_form_from_json(text);
  EXPECT_EQ(back, w);
  EXPECT_EQ(back.length_bound(), 6);
  EXPECT_THROW(dioph::word_form_from_json(R"({"k":0,"coeffs":[[1,1],[0,1]],"l":2})"),
               std::invalid_argument);
}

TEST(GaussianRational, ParsesDecimalsExactly) {
  const auto x = dioph::GaussianRational::parse("1.25,-0.5");
  EXPECT_EQ(x.re, dioph::BigRational(5, 4));
  EXPECT_EQ(x.im, dioph::BigRational(-1, 2));
  EXPECT_EQ(dioph::GaussianRational::parse_decimal("2.5e-1"), dioph::BigRational(1, 4));
  EXPECT_EQ(dioph::GaussianRational::parse_decimal("0.1"), dioph::BigRational(1, 10));
}

TEST(GaussianRational, ExactVanishing) {
  const auto two = dioph::GaussianRational::parse("2");
  EXPECT_TRUE(dioph::b_vanishes_exactly(WordForm(0, {{1, 1}, {0, -2}}, 5), two));
  EXPECT_FALSE(dioph::b_vanishes_exactly(WordForm(0, {{1, 1}, {0, -1}}, 4), two));
  const auto i = dioph::GaussianRational::parse("0,1");
  EXPECT_TRUE(dioph::b_vanishes_exactly(WordForm(0, {{2, 1}, {0, 1}}, 4), i));
}
