#include "dioph/ball.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "dioph/errors.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

constexpr std::array<std::uint64_t, 11> kKnownBallSizes = {
    1, 5, 17, 53, 153, 421, 1125, 2937, 7537, 19093, 47881};

}  // namespace

std::uint64_t estimated_ball_size(int l) {
  if (l < 0) return 0;
  if (l < static_cast<int>(kKnownBallSizes.size())) {
    return kKnownBallSizes[static_cast<std::size_t>(l)];
  }
  const double growth = 2.52;
  const double est = static_cast<double>(kKnownBallSizes.back()) *
                     std::pow(growth, l - static_cast<int>(kKnownBallSizes.size()) + 1);
  if (est > 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(est);
}

std::uint64_t word_count(int l) {
  if (l < 0) return 0;
  if (l >= 31) return std::numeric_limits<std::uint64_t>::max();
  return ((std::uint64_t{1} << (2 * (l + 1))) - 1) / 3;
}

std::size_t Ball::count_within(int m) const {
  return static_cast<std::size_t>(std::count_if(
      forms.begin(), forms.end(),
      [m](const WordForm& w) { return w.length_bound() <= m; }));
}

Ball enumerate_ball(int l, const BallOptions& options) {
  if (l < 0) throw DomainError("enumerate_ball: l must be nonnegative");
  if (l > options.cap) {
    throw ResourceLimitError(
        "enumerate_ball: l = " + std::to_string(l) + " exceeds the cap " +
            std::to_string(options.cap) + " (estimated " +
            std::to_string(estimated_ball_size(l)) + " elements)",
        estimated_ball_size(l));
  }
  const unsigned threads = resolve_threads(options.threads);
  const unsigned shards = std::max(1U, options.shards);

  std::vector<std::unordered_set<WordForm, WordFormHash>> seen(shards);
  std::vector<WordForm> all{WordForm::identity()};
  seen[WordForm::identity().hash() % shards].insert(WordForm::identity());
  std::vector<WordForm> frontier{WordForm::identity()};

  for (int depth = 1; depth <= l && !frontier.empty(); ++depth) {
    // Expansion: every worker writes only its own row of buckets.
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, frontier.size()));
    std::vector<std::vector<std::vector<WordForm>>> buckets(
        std::max(1U, workers), std::vector<std::vector<WordForm>>(shards));
    parallel_blocks(frontier.size(), workers,
                    [&](std::size_t begin, std::size_t end, unsigned worker) {
                      auto& row = buckets[worker];
                      for (std::size_t i = begin; i < end; ++i) {
                        for (Generator s : kAlphabet) {
                          WordForm next =
                              apply_generator(frontier[i], s, Side::kLeft);
                          row[next.hash() % shards].push_back(std::move(next));
                        }
                      }
                    });

    // Merge: one writer per shard.
    std::vector<std::vector<WordForm>> fresh(shards);
    parallel_blocks(shards, threads,
                    [&](std::size_t begin, std::size_t end, unsigned) {
                      for (std::size_t shard = begin; shard < end; ++shard) {
                        for (auto& row : buckets) {
                          for (auto& w : row[shard]) {
                            if (seen[shard].insert(w).second) {
                              fresh[shard].push_back(std::move(w));
                            }
                          }
                        }
                      }
                    });

    frontier.clear();
    for (auto& part : fresh) {
      for (auto& w : part) frontier.push_back(std::move(w));
    }
    all.insert(all.end(), frontier.begin(), frontier.end());
    if (all.size() > options.max_forms) {
      throw ResourceLimitError(
          "enumerate_ball: more than " + std::to_string(options.max_forms) +
              " forms at depth " + std::to_string(depth) + " (estimated " +
              std::to_string(estimated_ball_size(l)) + " elements)",
          estimated_ball_size(l));
    }
  }

  std::sort(all.begin(), all.end());
  return Ball{l, std::move(all)};
}

namespace {

void require_outside_unit_circle(Complex x, const char* op) {
  if (!(std::abs(x) > 1.0)) {
    throw DomainError(std::string(op) + ": requires |x| > 1");
  }
}

struct FormGap {
  double distance = 0.0;
  bool relation = false;
  bool exact = false;
};

FormGap form_gap(const WordForm& w, Complex x, const GapOptions& gap) {
  const AffineElement g = evaluate(w, x);
  FormGap out;
  out.distance = distance_to_identity(g);
  if (w.k() != 0 || w.b_is_zero()) return out;
  double scale = 0.0;
  const double modulus = std::abs(x);
  for (const auto& [e, c] : w.terms()) {
    scale += std::abs(static_cast<double>(c)) * std::pow(modulus, e);
  }
  if (std::abs(g.b) > gap.numeric_floor * scale) return out;
  if (gap.exact_x) {
    if (b_vanishes_exactly(w, *gap.exact_x)) {
      out.relation = true;
      out.exact = true;
    }
    return out;
  }
  out.relation = true;
  return out;
}

}  // namespace

std::vector<BallSummary> gap_profile(const Ball& ball, Complex x,
                                     const GapOptions& gap) {
  require_outside_unit_circle(x, "gap_profile");
  std::vector<const WordForm*> order;
  order.reserve(ball.forms.size());
  for (const auto& w : ball.forms) order.push_back(&w);
  std::stable_sort(order.begin(), order.end(),
                   [](const WordForm* a, const WordForm* b) {
                     return a->length_bound() < b->length_bound();
                   });

  std::vector<BallSummary> out;
  out.reserve(static_cast<std::size_t>(ball.l) + 1);
  BallSummary running;
  running.x = x;
  running.d_l = std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  for (int l = 0; l <= ball.l; ++l) {
    for (; next < order.size() && order[next]->length_bound() <= l; ++next) {
      const WordForm& w = *order[next];
      ++running.distinct_elements;
      if (w.is_identity()) continue;
      const FormGap fg = form_gap(w, x, gap);
      if (fg.relation) {
        if (!running.relation_witness) {
          running.relation_witness = w;
          running.relation_exact = fg.exact;
        }
        continue;
      }
      if (fg.distance < running.d_l) {
        running.d_l = fg.distance;
        running.argmin_word = w;
      }
    }
    running.l = l;
    running.words = word_count(l);
    out.push_back(running);
  }
  return out;
}

BallSummary word_gap(Complex x, int l, const GapOptions& gap,
                     const BallOptions& options) {
  require_outside_unit_circle(x, "word_gap");
  const Ball ball = enumerate_ball(l, options);
  return gap_profile(ball, x, gap).back();
}

DiophantineReport beta_profile(Complex x, int l_max, const GapOptions& gap,
                               const BallOptions& options) {
  require_outside_unit_circle(x, "beta_profile");
  const Ball ball = enumerate_ball(l_max, options);
  DiophantineReport report;
  report.x = x;
  report.l_max = l_max;
  report.per_l = gap_profile(ball, x, gap);
  report.beta_l.assign(report.per_l.size(), 0.0);
  for (std::size_t l = 1; l < report.per_l.size(); ++l) {
    const BallSummary& s = report.per_l[l];
    if (s.relation_witness) report.relation_found = true;
    if (!std::isfinite(s.d_l) || s.d_l <= 0.0) continue;
    const double log_inv = -std::log(s.d_l);
    const double beta = log_inv / std::log(static_cast<double>(s.distinct_elements));
    const double beta_words = log_inv / std::log(static_cast<double>(s.words));
    report.beta_l[l] = beta;
    report.beta_estimate = std::max(report.beta_estimate, beta);
    report.beta_estimate_words = std::max(report.beta_estimate_words, beta_words);
  }
  return report;
}

}  // namespace dioph
