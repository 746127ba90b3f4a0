#include "dioph/jensen.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "dioph/errors.hpp"

namespace dioph {

double default_c_r(double r) {
  if (!(r > 0.0)) throw DomainError("C_r: r must be positive");
  const double rho = std::sqrt(1.0 + r / 2.0);
  return (1.0 + std::log(rho / (rho - 1.0))) / std::log(rho);
}

double slope_c_r(double r) {
  if (!(r > 0.0)) throw DomainError("C_r: r must be positive");
  return 2.0 / std::log(1.0 + r / 2.0);
}

JensenCheck jensen_bound_check(const IntPoly& p, double r, double c_r,
                               const RootOptions& options, double tolerance) {
  if (p.is_zero()) throw std::invalid_argument("jensen_bound_check: zero polynomial");
  return jensen_bound_check(p, find_roots(p, options), r, c_r, tolerance);
}

JensenCheck jensen_bound_check(const IntPoly& p, const RootSet& roots, double r,
                               double c_r, double tolerance) {
  if (p.is_zero()) throw std::invalid_argument("jensen_bound_check: zero polynomial");
  if (!(r > 0.0)) throw DomainError("jensen_bound_check: r must be positive");
  JensenCheck out;
  out.r = r;
  out.rho = std::sqrt(1.0 + r / 2.0);
  out.c_r_configured = c_r;
  out.max_coeff = p.max_abs_coeff();

  const double threshold = 1.0 + r / 2.0;
  double mid = std::abs(static_cast<double>(p.leading()));
  for (const auto& z : roots.roots) {
    const double mod = std::abs(z);
    if (mod > threshold) ++out.large_root_count;
    if (mod > out.rho) mid *= mod / out.rho;
  }
  const double log_term = std::log(static_cast<double>(out.max_coeff)) + 1.0;
  out.c_r_witness = out.large_root_count / log_term;
  out.pass = out.large_root_count <= c_r * log_term;

  const int m = p.degree();
  double lhs = 0.0;
  for (int i = 0; i <= m; ++i) {
    lhs += std::abs(static_cast<double>(p.coeff(i))) * std::pow(out.rho, i - m);
  }
  out.chain_lhs = lhs;
  out.chain_mid = mid;
  out.chain_rhs = std::pow(out.rho, out.large_root_count);
  out.chain_holds = lhs >= mid * (1.0 - tolerance) &&
                    mid >= out.chain_rhs * (1.0 - tolerance);
  out.geometric_bound_holds =
      lhs <= out.rho / (out.rho - 1.0) * static_cast<double>(out.max_coeff) *
                 (1.0 + tolerance);
  return out;
}

MahlerCheck mahler_check(const IntPoly& p, int l, const RootOptions& options,
                         double tolerance) {
  if (p.is_zero()) throw std::invalid_argument("mahler_check: zero polynomial");
  return mahler_check(p, find_roots(p, options), l, tolerance);
}

MahlerCheck mahler_check(const IntPoly& p, const RootSet& roots, int l,
                         double tolerance) {
  if (p.is_zero()) throw std::invalid_argument("mahler_check: zero polynomial");
  MahlerCheck out;
  out.l = l;
  out.l1_norm = p.l1_norm();
  double measure = std::abs(static_cast<double>(p.leading()));
  for (const auto& z : roots.roots) measure *= std::max(1.0, std::abs(z));
  out.mahler = measure;
  out.pass = measure <= static_cast<double>(out.l1_norm) * (1.0 + tolerance) &&
             out.l1_norm <= l;
  return out;
}

}  // namespace dioph
