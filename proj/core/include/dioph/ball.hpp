#pragma once

// Word balls W_l for the pair (g1, g2): breadth-first enumeration with exact
// deduplication of normal forms, the gap d_l(x) = min_{g in W_l, g != 1} d(g, 1),
// and the exponent profile beta_l = log(1/d_l) / log|W_l|.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dioph/affine.hpp"
#include "dioph/gaussian_rational.hpp"

namespace dioph {

struct BallOptions {
  int cap = 12;
  std::size_t max_forms = 100'000'000;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Number of hash shards the frontier is partitioned into.
  unsigned shards = 16;
};

// Distinct normal forms in W_l, sorted by (k, b). Each form's length bound is
// the shortest word length that reaches it.
struct Ball {
  int l = 0;
  std::vector<WordForm> forms;

  std::size_t size() const { return forms.size(); }
  // Forms whose shortest word has length <= m.
  std::size_t count_within(int m) const;
};

// Throws ResourceLimitError when l exceeds options.cap or the form count
// passes options.max_forms.
Ball enumerate_ball(int l, const BallOptions& options = {});

// Rough size of W_l, used for resource-limit messages.
std::uint64_t estimated_ball_size(int l);

// Number of words of length at most l, (4^{l+1} - 1) / 3.
std::uint64_t word_count(int l);

struct BallSummary {
  int l = 0;
  Complex x;
  std::size_t distinct_elements = 0;
  std::uint64_t words = 0;
  double d_l = 0.0;
  WordForm argmin_word;
  // A nonidentity form whose value is the identity at x. With an exact x it
  // is certain; otherwise it is a numeric suspicion below the floor.
  std::optional<WordForm> relation_witness;
  bool relation_exact = false;
};

struct GapOptions {
  // |b| at or below floor * scale counts as a possible relation, where scale
  // is sum |c_e| |x|^e.
  double numeric_floor = 1e-14;
  // When set, candidate relations are decided exactly at this value.
  std::optional<GaussianRational> exact_x;
};

// Throws DomainError unless |x| > 1.
BallSummary word_gap(Complex x, int l, const GapOptions& gap = {},
                     const BallOptions& options = {});

// Gap summaries for every l in [0, ball.l] from a single enumeration.
std::vector<BallSummary> gap_profile(const Ball& ball, Complex x,
                                     const GapOptions& gap = {});

struct DiophantineReport {
  Complex x;
  int l_max = 0;
  double beta_estimate = 0.0;        // with |W_l| = distinct elements
  double beta_estimate_words = 0.0;  // with |W_l| = number of words
  std::vector<BallSummary> per_l;
  std::vector<double> beta_l;        // entry l; beta_l[0] is 0
  bool relation_found = false;
};

DiophantineReport beta_profile(Complex x, int l_max, const GapOptions& gap = {},
                               const BallOptions& options = {});

// min |m x + n| over (m, n) != (0, 0) with |m| + |n| <= l, for 0 < |x| < 1.
// Ties are broken towards the smallest m >= 0; the pair is normalised so
// that m > 0, or m = 0 and n = 1.
struct AbelianGap {
  double value = 0.0;
  std::int64_t m = 0;
  std::int64_t n = 0;
};

AbelianGap abelian_gap(double x, std::int64_t l);

}  // namespace dioph
