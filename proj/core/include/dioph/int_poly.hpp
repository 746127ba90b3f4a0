#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace dioph {

// Integer polynomial a_0 + a_1 x + ... + a_m x^m, coefficients stored
// low-to-high with trailing zeros trimmed. The zero polynomial has no
// coefficients and degree kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  IntPoly(std::initializer_list<std::int64_t> coeffs)
      : IntPoly(std::vector<std::int64_t>(coeffs)) {}

  // c * x^e
  static IntPoly monomial(std::int64_t c, int e);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size())
               ? coeffs_[static_cast<std::size_t>(i)]
               : 0;
  }
  std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::int64_t l1_norm() const;
  std::int64_t max_abs_coeff() const;
  // Number of trailing zero coefficients (multiplicity of the root 0).
  int low_order() const;

  // Member of the family with degree <= 2l and l1 norm <= l.
  bool in_family(int l) const;

  template <typename T>
  std::complex<T> evaluate(std::complex<T> x) const {
    std::complex<T> acc(0, 0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + static_cast<T>(*it);
    }
    return acc;
  }
  std::complex<double> operator()(std::complex<double> x) const {
    return evaluate<double>(x);
  }

  // sum |a_i| |x|^i
  double abs_evaluate(double modulus) const;

  IntPoly derivative() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend bool operator<(const IntPoly& p, const IntPoly& q) {
    return p.coeffs_ < q.coeffs_;
  }

  std::size_t hash() const;
  // e.g. "x^2 - 2x + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

struct IntPolyHash {
  std::size_t operator()(const IntPoly& p) const { return p.hash(); }
};

// |p - q|_inf over coefficients.
std::int64_t sup_distance(const IntPoly& p, const IntPoly& q);

}  // namespace dioph
