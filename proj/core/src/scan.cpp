#include <algorithm>
#include <cmath>
#include <string>

#include "dioph/errors.hpp"
#include "dioph/hausdorff.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

namespace {

std::size_t axis_points(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

ScanResult diophantine_scan(const GridSpec& grid, int l, double A,
                            const ScanOptions& options) {
  if (!(grid.step > 0.0)) throw DomainError("diophantine_scan: step must be positive");
  if (grid.x1 < grid.x0 || grid.y1 < grid.y0) {
    throw DomainError("diophantine_scan: rectangle corners out of order");
  }
  if (!(A > 0.0)) throw DomainError("diophantine_scan: A must be positive");

  ScanResult out;
  out.grid = grid;
  out.l = l;
  out.A = A;
  out.nx = axis_points(grid.x0, grid.x1, grid.step);
  out.ny = axis_points(grid.y0, grid.y1, grid.step);
  const std::size_t total = out.nx * out.ny;
  out.points.resize(total);

  for (std::size_t j = 0; j < out.ny; ++j) {
    for (std::size_t i = 0; i < out.nx; ++i) {
      const std::complex<double> x(grid.x0 + static_cast<double>(i) * grid.step,
                                   grid.y0 + static_cast<double>(j) * grid.step);
      const double m = std::abs(x);
      const bool ok = options.r ? (m >= 1.0 + *options.r && m <= 1.0 / *options.r)
                                : m > 1.0;
      if (!ok) {
        throw DomainError("diophantine_scan: grid point (" + std::to_string(x.real()) +
                          ", " + std::to_string(x.imag()) +
                          ") lies outside the admissible annulus");
      }
      out.points[j * out.nx + i].x = x;
    }
  }

  const double work = static_cast<double>(total) *
                      static_cast<double>(estimated_ball_size(l));
  if (work > static_cast<double>(options.max_work)) {
    throw ResourceLimitError("diophantine_scan: " + std::to_string(total) +
                                 " grid points times the ball size exceeds the guard",
                             static_cast<std::uint64_t>(std::min(work, 1.8e19)));
  }

  const Ball ball = enumerate_ball(l, options.ball);
  const double log_a_l = l * std::log(A);
  parallel_blocks(total, resolve_threads(options.threads),
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    for (std::size_t idx = begin; idx < end; ++idx) {
                      ScanPoint& pt = out.points[idx];
                      const BallSummary s = gap_profile(ball, pt.x, options.gap).back();
                      pt.l = l;
                      pt.d_l = s.d_l;
                      pt.relation = s.relation_witness.has_value();
                      pt.margin = std::exp(std::log(s.d_l) + log_a_l);
                    }
                  });
  return out;
}

std::vector<BoxCount> box_counting_estimate(const ScanResult& scan,
                                            const std::vector<double>& thresholds) {
  std::vector<BoxCount> out;
  const std::size_t extent = std::min(scan.nx, scan.ny);
  for (double t : thresholds) {
    BoxCount bc;
    bc.threshold = t;
    for (std::size_t m = 1; m <= extent && extent > 0; m *= 2) {
      const std::size_t bx = (scan.nx + m - 1) / m;
      const std::size_t by = (scan.ny + m - 1) / m;
      std::vector<bool> hit(bx * by, false);
      for (std::size_t j = 0; j < scan.ny; ++j) {
        for (std::size_t i = 0; i < scan.nx; ++i) {
          if (scan.at(i, j).margin < t) hit[(j / m) * bx + (i / m)] = true;
        }
      }
      bc.box_sizes.push_back(static_cast<double>(m) * scan.grid.step);
      bc.counts.push_back(static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true)));
    }
    std::vector<std::pair<double, double>> pts;
    for (std::size_t s = 0; s < bc.counts.size(); ++s) {
      if (bc.counts[s] > 0) {
        pts.emplace_back(-std::log(bc.box_sizes[s]),
                         std::log(static_cast<double>(bc.counts[s])));
      }
    }
    if (pts.size() >= 2) {
      double mx = 0.0;
      double my = 0.0;
      for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
      }
      mx /= static_cast<double>(pts.size());
      my /= static_cast<double>(pts.size());
      double sxy = 0.0;
      double sxx = 0.0;
      for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
      }
      if (sxx > 0.0) bc.slope = sxy / sxx;
    }
    out.push_back(std::move(bc));
  }
  return out;
}

}  // namespace dioph
