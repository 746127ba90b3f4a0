#include "dioph/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalized_angle(std::complex<double> z) {
  double t = std::arg(z);
  if (t < 0.0) t += kTwoPi;
  return t;
}

}  // namespace

bool Region::contains(std::complex<double> z, double slack) const {
  const double mod = std::abs(z);
  if (mod < rho_lo - slack || mod > rho_hi + slack) return false;
  const double t = normalized_angle(z);
  if (t >= theta_lo - slack && t <= theta_hi + slack) return true;
  // Sectors touching the positive real axis wrap around.
  return (theta_lo <= slack && t >= kTwoPi - slack) ||
         (theta_hi >= kTwoPi - slack && t <= slack);
}

long AnnulusDecomposition::locate(std::complex<double> z) const {
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].contains(z)) return static_cast<long>(i);
  }
  return -1;
}

double region_disk_constant(double r) {
  return std::min(0.125, 1.0 / r - 1.0 - r);
}

double region_count_constant(double r) { return 16.0 / (r * r); }

AnnulusDecomposition decompose_annulus(double r, int l, int k) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("decompose_annulus: need 0 < r < 1");
  if (!(1.0 + r < 1.0 / r)) {
    throw DomainError("decompose_annulus: degenerate annulus, 1 + r >= 1/r");
  }
  if (k < 1 || l < k) throw DomainError("decompose_annulus: need l >= k >= 1");

  AnnulusDecomposition out;
  out.r = r;
  out.l = l;
  out.k = k;
  out.scale = std::exp2(-static_cast<double>(l) / k);
  out.c = region_disk_constant(r);
  out.C = region_count_constant(r);

  // Size the cells slightly under the target so rounding cannot push a
  // computed diameter over it.
  const double delta = out.scale * (1.0 - 1e-9);
  const double rho_in = 1.0 + r;
  const double rho_out = 1.0 / r;
  const double thickness = rho_out - rho_in;
  const int shells = std::max(
      1, static_cast<int>(std::ceil(thickness * std::numbers::sqrt2 / delta)));
  const double t = thickness / shells;

  out.c_achieved = std::numeric_limits<double>::infinity();
  for (int s = 0; s < shells; ++s) {
    const double rho1 = rho_in + s * t;
    const double rho2 = (s + 1 == shells) ? rho_out : rho1 + t;
    // Corner-to-corner diagonal: t^2 + 2 rho1 rho2 (1 - cos dtheta) <= delta^2.
    const double cos_min = 1.0 - (delta * delta - t * t) / (2.0 * rho1 * rho2);
    double max_angle = std::acos(std::clamp(cos_min, -1.0, 1.0));
    // Outer chord: 2 rho2 sin(dtheta / 2) <= delta.
    max_angle = std::min(max_angle, 2.0 * std::asin(std::min(1.0, delta / (2.0 * rho2))));
    const int sectors = std::max(4, static_cast<int>(std::ceil(kTwoPi / max_angle)));
    const double dtheta = kTwoPi / sectors;
    const double rho_c = 0.5 * (rho1 + rho2);
    for (int j = 0; j < sectors; ++j) {
      Region g;
      g.rho_lo = rho1;
      g.rho_hi = rho2;
      g.theta_lo = j * dtheta;
      g.theta_hi = (j + 1 == sectors) ? kTwoPi : (j + 1) * dtheta;
      const double theta_c = 0.5 * (g.theta_lo + g.theta_hi);
      g.center = std::polar(rho_c, theta_c);
      g.inner_radius = std::min(0.5 * (rho2 - rho1), rho_c * std::sin(0.5 * dtheta));
      const std::complex<double> corners[4] = {
          std::polar(rho1, g.theta_lo), std::polar(rho1, g.theta_hi),
          std::polar(rho2, g.theta_lo), std::polar(rho2, g.theta_hi)};
      double outer = 0.0;
      for (const auto& q : corners) outer = std::max(outer, std::abs(q - g.center));
      g.outer_radius = outer;
      const double diagonal = std::abs(corners[0] - corners[3]);
      const double chord = std::abs(corners[2] - corners[3]);
      g.diameter = std::max({diagonal, chord, rho2 - rho1});
      out.c_achieved = std::min(out.c_achieved, g.inner_radius / out.scale);
      out.regions.push_back(g);
    }
  }
  return out;
}

}  // namespace dioph
