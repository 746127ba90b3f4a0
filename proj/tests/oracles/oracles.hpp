#pragma once

// Reference implementations written independently of the library, used as
// test oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// [[x^k, b], [0, 1]] with b a Laurent polynomial kept as an ordered map.
struct LaurentMatrix {
  int k = 0;
  std::map<int, long long> b;

  friend bool operator<(const LaurentMatrix& p, const LaurentMatrix& q) {
    return std::tie(p.k, p.b) < std::tie(q.k, q.b);
  }
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

inline LaurentMatrix multiply(const LaurentMatrix& p, const LaurentMatrix& q) {
  LaurentMatrix out{p.k + q.k, p.b};
  for (const auto& [e, c] : q.b) {
    long long& slot = out.b[e + p.k];
    slot += c;
    if (slot == 0) out.b.erase(e + p.k);
  }
  return out;
}

// Letters 0..3 stand for g1, g2, g1^-1, g2^-1.
inline LaurentMatrix letter(int s) {
  switch (s) {
    case 0: return {1, {}};
    case 1: return {0, {{0, 1}}};
    case 2: return {-1, {}};
    default: return {0, {{0, -1}}};
  }
}

inline LaurentMatrix product(const std::vector<int>& word) {
  LaurentMatrix acc;
  for (int s : word) acc = multiply(acc, letter(s));
  return acc;
}

// Every product of at most l letters, without sharing work between words.
inline std::set<LaurentMatrix> all_products(int l) {
  std::set<LaurentMatrix> seen;
  std::vector<int> word;
  std::function<void()> rec = [&]() {
    seen.insert(product(word));
    if (static_cast<int>(word.size()) == l) return;
    for (int s = 0; s < 4; ++s) {
      word.push_back(s);
      rec();
      word.pop_back();
    }
  };
  rec();
  return seen;
}

// 2x2 complex matrix product of generator matrices.
inline std::array<std::complex<double>, 4> matrix_product(const std::vector<int>& word,
                                                         std::complex<double> x) {
  using C = std::complex<double>;
  std::array<C, 4> m{C(1), C(0), C(0), C(1)};
  for (int s : word) {
    std::array<C, 4> g{C(1), C(0), C(0), C(1)};
    if (s == 0) g[0] = x;
    if (s == 1) g[1] = 1.0;
    if (s == 2) g[0] = 1.0 / x;
    if (s == 3) g[1] = -1.0;
    m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
         m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
  }
  return m;
}

// Vectors in the box [-radius, radius]^dim with l1 norm <= radius.
inline long long l1_box_count(int dim, int radius) {
  long long count = 0;
  std::vector<int> v(static_cast<std::size_t>(dim), -radius);
  while (true) {
    int s = 0;
    for (int c : v) s += std::abs(c);
    if (s <= radius) ++count;
    std::size_t i = 0;
    while (i < v.size() && v[i] == radius) v[i++] = -radius;
    if (i == v.size()) break;
    ++v[i];
  }
  return count;
}

// Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
template <typename F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Approx {
  double value;
  long long m;
  long long n;
};

// min |m x + n| over 0 < |m| + |n| <= l by scanning every pair.
inline Approx abelian_brute(double x, long long l) {
  Approx best{std::numeric_limits<double>::infinity(), 0, 0};
  for (long long m = 0; m <= l; ++m) {
    for (long long n = -(l - m); n <= l - m; ++n) {
      if (m == 0 && n <= 0) continue;
      const double v = std::abs(static_cast<double>(m) * x + static_cast<double>(n));
      if (v < best.value) best = {v, m, n};
    }
  }
  return best;
}

// Continued-fraction oracle for 0 < x < 1. With y = 1 / (1 + x) and
// s = m + |n| (n <= 0), |m x + n| = (1 + x) |s y - m|, so the best pairs are
// convergents p/q of y with q <= l, mapped back as m = p, n = -(q - p).
// The value |1| (m = 0, n = 1) competes as well.
inline Approx abelian_continued_fraction(double x, long long l) {
  const double y = 1.0 / (1.0 + x);
  Approx best{1.0, 0, 1};
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rem = y;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rem);
    const long long a = static_cast<long long>(a_real);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > l) break;
    if (q2 > 0) {
      const long long m = p2;
      const long long n = -(q2 - p2);
      const double v = std::abs(static_cast<double>(m) * x + static_cast<double>(n));
      if (v < best.value || (v == best.value && m < best.m)) best = {v, m, n};
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rem - a_real;
    if (frac <= 0.0) break;
    rem = 1.0 / frac;
  }
  return best;
}

}  // namespace oracle
