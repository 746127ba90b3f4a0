#pragma once

// The coefficient family P_l = { sum_{i<=2l} a_i x^i : a_i integer,
// sum |a_i| <= l }, lattice-point counts for l1 balls, and the coordinate-wise
// quantization map used to bound separated subsets of P_l.

#include <cstdint>
#include <optional>
#include <vector>

#include "dioph/gaussian_rational.hpp"
#include "dioph/int_poly.hpp"

namespace dioph {

inline constexpr int kDefaultFamilyCap = 7;

// Lazily yields every member of P_l exactly once, zero first. Magnitude
// vectors (a_0, ..., a_2l) with sum <= l are visited in lexicographic order
// and, for each, every sign pattern of the nonzero entries.
class FamilyEnumerator {
 public:
  explicit FamilyEnumerator(int l, int cap = kDefaultFamilyCap);

  std::optional<IntPoly> next();
  int l() const { return l_; }

 private:
  bool advance_magnitudes();

  int l_;
  std::vector<std::int64_t> magnitudes_;
  std::vector<std::size_t> support_;
  std::uint64_t sign_mask_ = 0;
  std::int64_t sum_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Materialises the enumerator.
std::vector<IntPoly> enumerate_family(int l, int cap = kDefaultFamilyCap);

// Number of integer vectors of length dim with l1 norm <= radius.
BigInt count_l1_ball(int dim, int radius);

// 2^{2l+1} * binom(3l, 2l), the stated upper bound on |P_l|.
BigInt family_size_bound(int l);

// Nearest integer with ties rounded down: <y> = y - 1/2 on half-integers.
std::int64_t nearest_integer_half_down(double y);

struct QuantizedVector {
  // (<a_2l / K>, ..., <a_0 / K>), highest coefficient first.
  std::vector<std::int64_t> entries;
  double K = 1.0;

  std::int64_t l1_norm() const;
  friend bool operator==(const QuantizedVector&, const QuantizedVector&) = default;
};

// K = e^{10k}. Requires p in P_l.
QuantizedVector quantize(const IntPoly& p, int l, int k);

// Same map without the membership requirement; dim entries, p of degree < dim.
QuantizedVector quantize_coefficients(const IntPoly& p, int dim, double K);

struct QuantizedClassBound {
  int l = 0;
  int k = 0;
  double K = 0.0;
  int radius = 0;        // floor(2l / K)
  BigInt exact;          // count_l1_ball(2l + 1, radius)
  double closed_form = 0.0;  // exp(4l/K + 2l log(K + 1) / K)
  double final_bound = 0.0;  // e^{l / 2k}
  // (2 log(K + 1) + 4) / K <= 1 / (2k), which turns closed_form into final_bound.
  bool constant_inequality_holds = false;
};

QuantizedClassBound quantized_class_bound(int l, int k);

}  // namespace dioph
