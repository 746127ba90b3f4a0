#pragma once

// The covering series bounding the alpha-dimensional Hausdorff measure of the
// non-Diophantine parameters, a parameter-space scan of d_l, and a
// box-counting heuristic over such scans.

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dioph/ball.hpp"

namespace dioph {

enum class TailMode { kCertified, kPartialOnly };

struct HausdorffSumParams {
  double alpha = 1.0;
  double a = 8.0;
  int n_start = 1;
  int l_max = 60;
  // Absorbs the class-count constant; the covering constant 16 / r^2 at r = 1/2.
  double C = 64.0;
  // Measured |P_l| (k = 0) or |Q_{l,k}| (k >= 1) replacing the stated bounds
  // 100^l and C 100^{l/(k+1)} for the listed (l, k).
  std::map<std::pair<int, int>, double> qlk_counts;
  TailMode mode = TailMode::kCertified;
};

struct HausdorffTail {
  double partial_sum = 0.0;  // l in [n_start, l_max]
  double tail_bound = 0.0;   // upper bound for l > l_max; 0 in partial mode
  double total = 0.0;
  double ratio = 0.0;        // 100 / 2^{alpha a}
  bool certified = false;
};

// Term (l, k) of the series, k in [0, floor(log l)]:
// count(l, k) * 2l * 2^{-alpha a l / (k + 1)} with count the stated bound
// C 100^{l/(k+1)} unless a measured value is supplied. Certified mode throws
// DomainError unless 2^{alpha a} > 100.
HausdorffTail hausdorff_tail(const HausdorffSumParams& params);

double hausdorff_term(const HausdorffSumParams& params, int l, int k);

struct ScanPoint {
  std::complex<double> x;
  int l = 0;
  double d_l = 0.0;
  double margin = 0.0;  // d_l * A^l
  bool relation = false;
};

struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  double step = 0.0;
};

// Row-major over the grid: point (i, j) is (x0 + i step, y0 + j step),
// i fastest.
struct ScanResult {
  GridSpec grid;
  std::size_t nx = 0;
  std::size_t ny = 0;
  int l = 0;
  double A = 0.0;
  std::vector<ScanPoint> points;

  const ScanPoint& at(std::size_t i, std::size_t j) const { return points[j * nx + i]; }
};

struct ScanOptions {
  BallOptions ball;
  GapOptions gap;
  // Optional annulus {1 + r <= |x| <= 1/r} every grid point must lie in;
  // without it only |x| > 1 is required.
  std::optional<double> r;
  std::size_t max_work = 2'000'000'000;  // grid points times ball size
  unsigned threads = 0;
};

ScanResult diophantine_scan(const GridSpec& grid, int l, double A,
                            const ScanOptions& options = {});

struct BoxCount {
  double threshold = 0.0;
  std::vector<double> box_sizes;
  std::vector<std::size_t> counts;
  std::optional<double> slope;  // least squares of log count vs log(1/size)
};

// Heuristic only. Boxes are blocks of 1, 2, 4, ... grid cells; a box counts
// when some point in it has margin < threshold. The slope needs at least two
// box sizes with nonzero counts.
std::vector<BoxCount> box_counting_estimate(const ScanResult& scan,
                                            const std::vector<double>& thresholds);

}  // namespace dioph
