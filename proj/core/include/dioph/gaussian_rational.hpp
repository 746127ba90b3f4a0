#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "dioph/affine.hpp"

namespace dioph {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact complex rational p + q i, used to decide whether a word value is
// exactly zero.
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  // Parses a decimal literal such as "1.25", "-3", "2.5e-1" exactly.
  static BigRational parse_decimal(std::string_view text);
  // "RE,IM" or "RE" (imaginary part zero).
  static GaussianRational parse(std::string_view text);
  // The exact dyadic value of a double pair.
  static GaussianRational from_complex(Complex z);

  bool is_zero() const { return re == 0 && im == 0; }
  Complex to_complex() const;

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;
};

// True when sum_e coeff(e) x^e is exactly zero. Since the Laurent factor
// x^low is a unit for x != 0, only the dense polynomial part is evaluated.
bool b_vanishes_exactly(const WordForm& w, const GaussianRational& x);

}  // namespace dioph
