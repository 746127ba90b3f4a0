#pragma once

// Elements of the affine group of the complex line, realized as matrices
// [[a, b], [0, 1]], for the generator pair
//
//   g1 = [[x, 0], [0, 1]],   g2 = [[1, 1], [0, 1]].
//
// Two representations are provided: AffineElement holds numeric entries for
// a fixed parameter x, and WordForm holds the exact normal form
// (x^k, sum_e c_e x^e) that every word in the generators reduces to.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dioph {

using Complex = std::complex<double>;

enum class Generator : std::uint8_t { kG1, kG2, kG1Inv, kG2Inv };

inline constexpr std::array<Generator, 4> kAlphabet = {
    Generator::kG1, Generator::kG2, Generator::kG1Inv, Generator::kG2Inv};

constexpr Generator inverse(Generator s) {
  switch (s) {
    case Generator::kG1: return Generator::kG1Inv;
    case Generator::kG2: return Generator::kG2Inv;
    case Generator::kG1Inv: return Generator::kG1;
    case Generator::kG2Inv: return Generator::kG2;
  }
  return s;
}

const char* to_string(Generator s);

enum class Side : std::uint8_t { kLeft, kRight };

template <typename T>
struct BasicAffineElement {
  std::complex<T> a{1, 0};
  std::complex<T> b{0, 0};

  static BasicAffineElement identity() { return {}; }

  static BasicAffineElement generator(Generator s, std::complex<T> x) {
    switch (s) {
      case Generator::kG1: return {x, {0, 0}};
      case Generator::kG2: return {{1, 0}, {1, 0}};
      case Generator::kG1Inv: return {T(1) / x, {0, 0}};
      case Generator::kG2Inv: return {{1, 0}, {-1, 0}};
    }
    return {};
  }

  // [[a, b], [0, 1]] * [[a', b'], [0, 1]] = [[a a', a b' + b], [0, 1]]
  BasicAffineElement operator*(const BasicAffineElement& rhs) const {
    return {a * rhs.a, a * rhs.b + b};
  }

  BasicAffineElement inverse() const {
    const std::complex<T> inv = T(1) / a;
    return {inv, -inv * b};
  }
};

using AffineElement = BasicAffineElement<double>;

// d(g, 1) = max(|a - 1|, |b|).
template <typename T>
T distance_to_identity(const BasicAffineElement<T>& g) {
  using std::abs;
  const T da = abs(g.a - std::complex<T>(1, 0));
  const T db = abs(g.b);
  return da > db ? da : db;
}

// Exact normal form of a word: a = x^k, b = sum_e coeff(e) x^e.
//
// Coefficients are kept as a dense array starting at the lowest nonzero
// exponent; an empty array means b = 0. Equality and hashing look only at
// (k, b); the length bound is the word length the form was produced with.
class WordForm {
 public:
  WordForm() = default;

  // Throws std::invalid_argument if the normal-form bounds for
  // `length_bound` are violated.
  WordForm(int k, const std::map<int, std::int64_t>& coeffs, int length_bound);

  static WordForm identity() { return {}; }

  int k() const { return k_; }
  int length_bound() const { return length_bound_; }
  bool b_is_zero() const { return coeffs_.empty(); }
  bool is_identity() const { return k_ == 0 && coeffs_.empty(); }

  // Lowest exponent with a nonzero coefficient; 0 when b = 0.
  int low_exponent() const { return low_; }
  int high_exponent() const {
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const std::int64_t> dense_coeffs() const { return coeffs_; }
  std::int64_t coeff(int exponent) const;

  // Nonzero (exponent, coefficient) pairs, exponents increasing.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  std::int64_t l1_norm() const;

  // |k| <= l, every exponent in [-l, l], l1 norm <= l, with l = length_bound.
  bool satisfies_bounds() const { return satisfies_bounds(length_bound_); }
  bool satisfies_bounds(int l) const;

  WordForm with_length_bound(int l) const {
    WordForm w = *this;
    w.length_bound_ = l;
    return w;
  }

  std::size_t hash() const;

  friend bool operator==(const WordForm& lhs, const WordForm& rhs) {
    return lhs.k_ == rhs.k_ && lhs.low_ == rhs.low_ &&
           lhs.coeffs_ == rhs.coeffs_;
  }
  // Total order on (k, b) used for deterministic output.
  friend bool operator<(const WordForm& lhs, const WordForm& rhs);

 private:
  friend WordForm apply_generator(const WordForm&, Generator, Side);
  void trim();

  int k_ = 0;
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
  int length_bound_ = 0;
};

struct WordFormHash {
  std::size_t operator()(const WordForm& w) const { return w.hash(); }
};

// Multiplies the form by a generator on the given side; the length bound
// grows by one.
WordForm apply_generator(const WordForm& w, Generator s, Side side);

// Folds apply_generator over a word from the identity. Left multiplication
// processes letters from the right end, so the result is the form of the
// product s_1 s_2 ... s_m in either case.
WordForm word_to_form(std::span<const Generator> word, Side side = Side::kLeft);

// a = x^k, b = sum coeff(e) x^e, evaluated by Horner's rule in a fixed order.
template <typename T>
BasicAffineElement<T> evaluate_as(const WordForm& w, std::complex<T> x);

AffineElement evaluate(const WordForm& w, Complex x);

// Same value with long double accumulation.
BasicAffineElement<long double> evaluate_extended(const WordForm& w, Complex x);

// Product of the numeric generator matrices s_1 * ... * s_m.
AffineElement evaluate_word(std::span<const Generator> word, Complex x);

// {"k": int, "coeffs": [[exponent, coeff], ...], "l": int}
std::string to_json(const WordForm& w);
WordForm word_form_from_json(const std::string& text);

}  // namespace dioph
