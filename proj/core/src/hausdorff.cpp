#include "dioph/hausdorff.hpp"

#include <cmath>
#include <limits>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

int max_k(int l) { return static_cast<int>(std::floor(std::log(static_cast<double>(l)))); }

// log of the stated-bound term 2 C l 100^{l/(k+1)} 2^{-alpha a l/(k+1)}.
double log_bound_term(const HausdorffSumParams& p, double l, int k) {
  const double log_ratio = std::log(100.0) - p.alpha * p.a * std::log(2.0);
  return std::log(2.0 * p.C * l) + l / (k + 1) * log_ratio;
}

// Upper bound for sum_{l in [lo, hi)} sum_k term(l, k), stated bounds only.
// Uses the largest multiplier, the largest k and the smallest exponent in
// the block; valid while 100 < 2^{alpha a}.
double block_bound(const HausdorffSumParams& p, long lo, long hi) {
  const double top = static_cast<double>(hi - 1);
  const int kmax = max_k(static_cast<int>(std::min<long>(hi - 1, INT32_MAX)));
  const double log_ratio = std::log(100.0) - p.alpha * p.a * std::log(2.0);
  const double log_term = std::log(2.0 * p.C * top) +
                          static_cast<double>(lo) / (kmax + 1) * log_ratio;
  return static_cast<double>(hi - lo) * (kmax + 1) * std::exp(log_term);
}

}  // namespace

double hausdorff_term(const HausdorffSumParams& params, int l, int k) {
  const auto it = params.qlk_counts.find({l, k});
  if (it != params.qlk_counts.end()) {
    if (it->second <= 0.0) return 0.0;
    return it->second * 2.0 * l *
           std::exp2(-params.alpha * params.a * l / (k + 1));
  }
  return std::exp(log_bound_term(params, l, k));
}

HausdorffTail hausdorff_tail(const HausdorffSumParams& params) {
  if (!(params.alpha > 0.0 && params.alpha <= 1.0)) {
    throw DomainError("hausdorff_tail: alpha must lie in (0, 1]");
  }
  if (!(params.a > 1.0)) throw DomainError("hausdorff_tail: a must exceed 1");
  if (params.n_start < 1 || params.l_max < params.n_start) {
    throw DomainError("hausdorff_tail: need 1 <= n_start <= l_max");
  }
  HausdorffTail out;
  out.ratio = 100.0 / std::exp2(params.alpha * params.a);
  const bool certified = params.mode == TailMode::kCertified;
  if (certified && !(out.ratio < 1.0)) {
    throw DomainError("hausdorff_tail: certified mode needs 2^{alpha a} > 100");
  }
  out.certified = certified;

  for (int l = params.n_start; l <= params.l_max; ++l) {
    for (int k = 0; k <= max_k(l); ++k) out.partial_sum += hausdorff_term(params, l, k);
  }

  if (certified) {
    // Doubling blocks. Once consecutive block bounds shrink by half they keep
    // shrinking faster (the exponent grows like l / log l), so the rest is
    // dominated by the current block.
    long lo = params.l_max + 1;
    double tail = 0.0;
    double previous = block_bound(params, lo, 2 * lo);
    tail += previous;
    bool closed = false;
    for (int step = 0; step < 60; ++step) {
      lo *= 2;
      const double current = block_bound(params, lo, 2 * lo);
      tail += current;
      if (current == 0.0 || (previous > 0.0 && current <= 0.5 * previous &&
                             current < 1e-6 * tail)) {
        tail += current;
        closed = true;
        break;
      }
      previous = current;
    }
    out.tail_bound = closed ? tail : std::numeric_limits<double>::infinity();
  }
  out.total = out.partial_sum + out.tail_bound;
  return out;
}

}  // namespace dioph
