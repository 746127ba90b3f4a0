#pragma once

#include <complex>
#include <vector>

namespace dioph {

// One cell X_i of the annulus decomposition: a polar sector
// {rho_lo <= |x| <= rho_hi, theta_lo <= arg x <= theta_hi}.
struct Region {
  std::complex<double> center;
  double inner_radius = 0.0;  // disk around center contained in the cell
  double outer_radius = 0.0;  // disk around center containing the cell
  double diameter = 0.0;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  double theta_lo = 0.0;  // in [0, 2 pi)
  double theta_hi = 0.0;

  bool contains(std::complex<double> z, double slack = 1e-12) const;
};

// X = {1 + r <= |x| <= 1/r} = X_1 u ... u X_N with diam X_i <= 2^{-l/k},
// each X_i containing a disk of radius c 2^{-l/k}, and N <= C 4^{l/k}.
struct AnnulusDecomposition {
  double r = 0.0;
  int l = 0;
  int k = 0;
  double scale = 0.0;     // 2^{-l/k}
  double c = 0.0;         // guaranteed inscribed-disk constant
  double c_achieved = 0.0;  // min_i inner_radius / scale
  double C = 0.0;         // 16 / r^2
  std::vector<Region> regions;

  std::size_t N() const { return regions.size(); }
  double inner_rho() const { return 1.0 + r; }
  double outer_rho() const { return 1.0 / r; }
  // Index of a region containing z, or -1.
  long locate(std::complex<double> z) const;
};

// min(1/8, 1/r - 1 - r)
double region_disk_constant(double r);
// 16 / r^2
double region_count_constant(double r);

// Throws DomainError unless 0 < r < 1, 1 + r < 1/r and l >= k >= 1.
AnnulusDecomposition decompose_annulus(double r, int l, int k);

}  // namespace dioph
