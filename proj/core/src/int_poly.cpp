#include "dioph/int_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dioph {

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(std::int64_t c, int e) {
  if (e < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  std::vector<std::int64_t> v(static_cast<std::size_t>(e) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPoly::l1_norm() const {
  std::int64_t total = 0;
  for (std::int64_t c : coeffs_) total += std::llabs(c);
  return total;
}

std::int64_t IntPoly::max_abs_coeff() const {
  std::int64_t best = 0;
  for (std::int64_t c : coeffs_) best = std::max<std::int64_t>(best, std::llabs(c));
  return best;
}

int IntPoly::low_order() const {
  int j = 0;
  while (j < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(j)] == 0) ++j;
  return j;
}

bool IntPoly::in_family(int l) const {
  if (l < 0) return false;
  return (is_zero() || degree() <= 2 * l) && l1_norm() <= l;
}

double IntPoly::abs_evaluate(double modulus) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * modulus + std::abs(static_cast<double>(*it));
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<std::int64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = static_cast<std::int64_t>(i) * coeffs_[i];
  }
  return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<std::int64_t> v(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) v[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) v[i] += q.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<std::int64_t> v(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return IntPoly(std::move(v));
}

std::size_t IntPoly::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::int64_t c : coeffs_) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  h ^= coeffs_.size();
  return static_cast<std::size_t>(h);
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::int64_t sup_distance(const IntPoly& p, const IntPoly& q) {
  return (p - q).max_abs_coeff();
}

}  // namespace dioph
