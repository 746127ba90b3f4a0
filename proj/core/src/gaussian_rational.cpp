#include "dioph/gaussian_rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dioph {

BigRational GaussianRational::parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&]() -> BigRational {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) +
                                "'");
  };
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  int scale = 0;
  bool digits = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) ++scale;
      digits = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) return fail();
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const std::string rest(text.substr(pos));
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      return fail();
    }
    pos += used;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) return fail();
  if (exponent > 4000 || exponent < -4000) return fail();
  const long shift = exponent - scale;
  BigRational value(mantissa);
  const BigInt ten_pow = boost::multiprecision::pow(BigInt(10),
                                                    static_cast<unsigned>(shift < 0 ? -shift : shift));
  if (shift >= 0) {
    value *= ten_pow;
  } else {
    value /= ten_pow;
  }
  return negative ? BigRational(-value) : value;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return {parse_decimal(text), BigRational(0)};
  }
  return {parse_decimal(text.substr(0, comma)),
          parse_decimal(text.substr(comma + 1))};
}

namespace {

BigRational exact_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (v == 0.0) return BigRational(0);
  int exp2 = 0;
  const double frac = std::frexp(v, &exp2);
  // frac * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(frac, 53));
  BigRational value{BigInt(scaled)};
  const int shift = exp2 - 53;
  const BigInt two_pow = BigInt(1) << (shift < 0 ? -shift : shift);
  if (shift >= 0) {
    value *= two_pow;
  } else {
    value /= two_pow;
  }
  return value;
}

}  // namespace

GaussianRational GaussianRational::from_complex(Complex z) {
  return {exact_double(z.real()), exact_double(z.imag())};
}

Complex GaussianRational::to_complex() const {
  return {re.convert_to<double>(), im.convert_to<double>()};
}

bool b_vanishes_exactly(const WordForm& w, const GaussianRational& x) {
  const auto coeffs = w.dense_coeffs();
  if (coeffs.empty()) return true;
  GaussianRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    acc.re += BigRational(*it);
  }
  return acc.is_zero();
}

}  // namespace dioph
