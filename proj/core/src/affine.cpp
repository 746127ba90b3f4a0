#include "dioph/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "dioph/errors.hpp"
#include "json.hpp"

namespace dioph {

const char* to_string(Generator s) {
  switch (s) {
    case Generator::kG1: return "g1";
    case Generator::kG2: return "g2";
    case Generator::kG1Inv: return "g1^-1";
    case Generator::kG2Inv: return "g2^-1";
  }
  return "?";
}

WordForm::WordForm(int k, const std::map<int, std::int64_t>& coeffs,
                   int length_bound)
    : k_(k), length_bound_(length_bound) {
  if (length_bound < 0) {
    throw std::invalid_argument("WordForm: negative length bound");
  }
  std::vector<std::pair<int, std::int64_t>> nonzero;
  for (const auto& [e, c] : coeffs) {
    if (c != 0) nonzero.emplace_back(e, c);
  }
  if (!nonzero.empty()) {
    low_ = nonzero.front().first;
    coeffs_.assign(nonzero.back().first - low_ + 1, 0);
    for (const auto& [e, c] : nonzero) coeffs_[e - low_] = c;
  }
  if (!satisfies_bounds(length_bound)) {
    throw std::invalid_argument(
        "WordForm: (k, coeffs) violate the normal-form bounds for l = " +
        std::to_string(length_bound));
  }
}

std::int64_t WordForm::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) {
    return 0;
  }
  return coeffs_[exponent - low_];
}

std::vector<std::pair<int, std::int64_t>> WordForm::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::int64_t WordForm::l1_norm() const {
  std::int64_t total = 0;
  for (std::int64_t c : coeffs_) total += std::llabs(c);
  return total;
}

bool WordForm::satisfies_bounds(int l) const {
  if (std::abs(k_) > l) return false;
  if (!coeffs_.empty() && (low_ < -l || high_exponent() > l)) return false;
  return l1_norm() <= l;
}

std::size_t WordForm::hash() const {
  // FNV-1a over k, low exponent and the dense coefficients.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(k_)));
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(low_)));
  for (std::int64_t c : coeffs_) mix(static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

bool operator<(const WordForm& lhs, const WordForm& rhs) {
  if (lhs.k_ != rhs.k_) return lhs.k_ < rhs.k_;
  const auto lt = lhs.terms();
  const auto rt = rhs.terms();
  return lt < rt;
}

void WordForm::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](std::int64_t c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_ = std::vector<std::int64_t>(first, last.base());
}

namespace {

// b += delta * x^e
void add_monomial(int& low, std::vector<std::int64_t>& coeffs, int e,
                  std::int64_t delta) {
  if (coeffs.empty()) {
    low = e;
    coeffs.assign(1, delta);
    return;
  }
  const int high = low + static_cast<int>(coeffs.size()) - 1;
  if (e < low) {
    coeffs.insert(coeffs.begin(), static_cast<std::size_t>(low - e), 0);
    low = e;
  } else if (e > high) {
    coeffs.resize(coeffs.size() + static_cast<std::size_t>(e - high), 0);
  }
  coeffs[static_cast<std::size_t>(e - low)] += delta;
}

}  // namespace

WordForm apply_generator(const WordForm& w, Generator s, Side side) {
  WordForm out = w;
  out.length_bound_ = w.length_bound_ + 1;
  if (side == Side::kLeft) {
    switch (s) {
      case Generator::kG1:
        ++out.k_;
        if (!out.coeffs_.empty()) ++out.low_;
        break;
      case Generator::kG1Inv:
        --out.k_;
        if (!out.coeffs_.empty()) --out.low_;
        break;
      case Generator::kG2:
        add_monomial(out.low_, out.coeffs_, 0, 1);
        break;
      case Generator::kG2Inv:
        add_monomial(out.low_, out.coeffs_, 0, -1);
        break;
    }
  } else {
    switch (s) {
      case Generator::kG1: ++out.k_; break;
      case Generator::kG1Inv: --out.k_; break;
      case Generator::kG2:
        add_monomial(out.low_, out.coeffs_, w.k_, 1);
        break;
      case Generator::kG2Inv:
        add_monomial(out.low_, out.coeffs_, w.k_, -1);
        break;
    }
  }
  out.trim();
  return out;
}

WordForm word_to_form(std::span<const Generator> word, Side side) {
  WordForm w;
  if (side == Side::kLeft) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      w = apply_generator(w, *it, Side::kLeft);
    }
  } else {
    for (Generator s : word) w = apply_generator(w, s, Side::kRight);
  }
  return w;
}

namespace {

template <typename T>
std::complex<T> int_power(std::complex<T> x, int n) {
  std::complex<T> base = n < 0 ? T(1) / x : x;
  unsigned m = static_cast<unsigned>(n < 0 ? -n : n);
  std::complex<T> result(1, 0);
  while (m != 0) {
    if (m & 1U) result *= base;
    base *= base;
    m >>= 1U;
  }
  return result;
}

}  // namespace

template <typename T>
BasicAffineElement<T> evaluate_as(const WordForm& w, std::complex<T> x) {
  if (x == std::complex<T>(0, 0)) {
    throw DomainError("evaluate: x must be nonzero");
  }
  BasicAffineElement<T> g;
  g.a = int_power(x, w.k());
  const auto coeffs = w.dense_coeffs();
  if (coeffs.empty()) return g;
  std::complex<T> acc(0, 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + static_cast<T>(*it);
  }
  g.b = acc * int_power(x, w.low_exponent());
  return g;
}

template BasicAffineElement<double> evaluate_as(const WordForm&,
                                                std::complex<double>);
template BasicAffineElement<long double> evaluate_as(const WordForm&,
                                                     std::complex<long double>);

AffineElement evaluate(const WordForm& w, Complex x) {
  return evaluate_as<double>(w, x);
}

BasicAffineElement<long double> evaluate_extended(const WordForm& w,
                                                  Complex x) {
  return evaluate_as<long double>(
      w, std::complex<long double>(x.real(), x.imag()));
}

AffineElement evaluate_word(std::span<const Generator> word, Complex x) {
  if (x == Complex(0, 0)) throw DomainError("evaluate_word: x must be nonzero");
  AffineElement g;
  for (Generator s : word) g = g * AffineElement::generator(s, x);
  return g;
}

std::string to_json(const WordForm& w) {
  nlohmann::json j;
  j["k"] = w.k();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : w.terms()) coeffs.push_back({e, c});
  j["coeffs"] = std::move(coeffs);
  j["l"] = w.length_bound();
  return j.dump();
}

WordForm word_form_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::map<int, std::int64_t> coeffs;
  bool first = true;
  int previous = 0;
  for (const auto& term : j.at("coeffs")) {
    const int e = term.at(0).get<int>();
    if (!first && e <= previous) {
      throw std::invalid_argument(
          "WordForm JSON: exponents must be strictly increasing");
    }
    coeffs[e] = term.at(1).get<std::int64_t>();
    previous = e;
    first = false;
  }
  return WordForm(j.at("k").get<int>(), coeffs, j.at("l").get<int>());
}

}  // namespace dioph
