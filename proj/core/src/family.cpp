#include "dioph/family.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "dioph/errors.hpp"

namespace dioph {

FamilyEnumerator::FamilyEnumerator(int l, int cap) : l_(l) {
  if (l < 0) throw DomainError("enumerate_family: l must be nonnegative");
  if (l > cap) {
    const BigInt est = count_l1_ball(2 * l + 1, l);
    throw ResourceLimitError(
        "enumerate_family: l = " + std::to_string(l) + " exceeds the cap " +
            std::to_string(cap) + " (" + est.str() + " polynomials)",
        est > BigInt(UINT64_MAX) ? UINT64_MAX : est.convert_to<std::uint64_t>());
  }
  magnitudes_.assign(static_cast<std::size_t>(2 * l + 1), 0);
}

bool FamilyEnumerator::advance_magnitudes() {
  const std::size_t dim = magnitudes_.size();
  if (sum_ < l_) {
    ++magnitudes_[dim - 1];
    ++sum_;
    return true;
  }
  std::size_t i = dim - 1;
  while (i > 0 && magnitudes_[i] == 0) --i;
  if (i == 0) return false;
  sum_ -= magnitudes_[i] - 1;
  magnitudes_[i] = 0;
  ++magnitudes_[i - 1];
  return true;
}

std::optional<IntPoly> FamilyEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return IntPoly();
  }
  if (!support_.empty() && sign_mask_ + 1 < (std::uint64_t{1} << support_.size())) {
    ++sign_mask_;
  } else {
    if (!advance_magnitudes()) {
      done_ = true;
      return std::nullopt;
    }
    support_.clear();
    for (std::size_t i = 0; i < magnitudes_.size(); ++i) {
      if (magnitudes_[i] != 0) support_.push_back(i);
    }
    sign_mask_ = 0;
  }
  std::vector<std::int64_t> coeffs(magnitudes_.size(), 0);
  for (std::size_t j = 0; j < support_.size(); ++j) {
    const std::size_t i = support_[j];
    const bool negative = (sign_mask_ >> j) & 1U;
    coeffs[i] = negative ? -magnitudes_[i] : magnitudes_[i];
  }
  return IntPoly(std::move(coeffs));
}

std::vector<IntPoly> enumerate_family(int l, int cap) {
  FamilyEnumerator it(l, cap);
  std::vector<IntPoly> out;
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

BigInt count_l1_ball(int dim, int radius) {
  if (dim < 1) throw DomainError("count_l1_ball: dim must be >= 1");
  if (radius < 0) throw DomainError("count_l1_ball: radius must be >= 0");
  // N(d, r) = N(d-1, r) + 2 sum_{j=1}^{r} N(d-1, r-j), N(0, r) = 1.
  std::vector<BigInt> prev(static_cast<std::size_t>(radius) + 1, BigInt(1));
  for (int d = 1; d <= dim; ++d) {
    std::vector<BigInt> cur(prev.size());
    BigInt prefix = 0;  // sum_{s < r} prev[s]
    for (std::size_t r = 0; r < prev.size(); ++r) {
      cur[r] = prev[r] + 2 * prefix;
      prefix += prev[r];
    }
    prev = std::move(cur);
  }
  return prev.back();
}

BigInt family_size_bound(int l) {
  if (l < 0) throw DomainError("family_size_bound: l must be nonnegative");
  BigInt binom = 1;
  // binom(3l, 2l) = binom(3l, l)
  for (int i = 1; i <= l; ++i) {
    binom = binom * (2 * l + i) / i;
  }
  return (BigInt(1) << (2 * l + 1)) * binom;
}

std::int64_t nearest_integer_half_down(double y) {
  return static_cast<std::int64_t>(std::ceil(y - 0.5));
}

std::int64_t QuantizedVector::l1_norm() const {
  std::int64_t total = 0;
  for (std::int64_t e : entries) total += std::llabs(e);
  return total;
}

QuantizedVector quantize_coefficients(const IntPoly& p, int dim, double K) {
  if (!(K > 0.0)) throw DomainError("quantize: K must be positive");
  if (!p.is_zero() && p.degree() >= dim) {
    throw DomainError("quantize: degree does not fit the vector length");
  }
  QuantizedVector q;
  q.K = K;
  q.entries.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    const double a = static_cast<double>(p.coeff(dim - 1 - i));
    q.entries[static_cast<std::size_t>(i)] = nearest_integer_half_down(a / K);
  }
  return q;
}

QuantizedVector quantize(const IntPoly& p, int l, int k) {
  if (!p.in_family(l)) {
    throw DomainError("quantize: polynomial " + p.to_string() +
                      " is not in P_" + std::to_string(l));
  }
  if (k < 0) throw DomainError("quantize: k must be nonnegative");
  return quantize_coefficients(p, 2 * l + 1, std::exp(10.0 * k));
}

QuantizedClassBound quantized_class_bound(int l, int k) {
  if (l < 1 || k < 1) throw DomainError("quantized_class_bound: needs l, k >= 1");
  QuantizedClassBound out;
  out.l = l;
  out.k = k;
  out.K = std::exp(10.0 * k);
  out.radius = static_cast<int>(std::floor(2.0 * l / out.K));
  out.exact = count_l1_ball(2 * l + 1, out.radius);
  const double log_k1 = std::log(out.K + 1.0);
  out.closed_form = std::exp(4.0 * l / out.K + 2.0 * l * log_k1 / out.K);
  out.final_bound = std::exp(static_cast<double>(l) / (2.0 * k));
  out.constant_inequality_holds =
      (2.0 * log_k1 + 4.0) / out.K <= 1.0 / (2.0 * k);
  return out;
}

}  // namespace dioph
