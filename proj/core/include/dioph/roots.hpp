#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/int_poly.hpp"

namespace dioph {

struct RootOptions {
  int max_iterations = 400;
  // Seeds the angular offset of the starting circle.
  std::uint64_t seed = 0x5eed;
};

// All complex roots of an integer polynomial, with multiplicity.
struct RootSet {
  std::vector<std::complex<double>> roots;
  std::int64_t leading = 0;
  // max_i |P(z_i)|
  double residual_bound = 0.0;
  // Every true root lies within this distance of some computed root
  // (degree times the largest Weierstrass correction); infinite when two
  // computed roots coincide.
  double inclusion_radius = 0.0;
  int iterations = 0;
  bool used_companion_fallback = false;
};

class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, RootSet partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

// Aberth-Ehrlich simultaneous iteration from a perturbed circle of starting
// points; falls back to companion-matrix eigenvalues when the iteration
// stalls. Exact zero roots are split off before iterating. Throws
// std::invalid_argument for the zero polynomial and RootFindingError when
// neither route reaches rounding-level residuals.
RootSet find_roots(const IntPoly& p, const RootOptions& options = {});

// Coefficients (low to high) of leading * prod (x - z_i), accumulated in
// long double.
std::vector<std::complex<long double>> reconstruct_coefficients(const RootSet& roots);

// max_i |reconstructed_i - a_i| / max_i |a_i|
double reconstruction_error(const IntPoly& p, const RootSet& roots);

}  // namespace dioph
