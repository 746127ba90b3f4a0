#pragma once

// Root-count and Mahler-measure checks that follow from Jensen's formula.

#include <cstdint>

#include "dioph/int_poly.hpp"
#include "dioph/roots.hpp"

namespace dioph {

// C_r obtained by taking logarithms in rho^count <= rho/(rho-1) * max|a_i|:
// (1 + log(rho / (rho - 1))) / log(rho), rho = sqrt(1 + r/2).
double default_c_r(double r);

// 1 / log(rho) = 2 / log(1 + r/2): the count bound's coefficient of
// log(max|a_i|) alone.
double slope_c_r(double r);

struct JensenCheck {
  double r = 0.0;
  double rho = 0.0;
  int large_root_count = 0;       // |{i : |z_i| > 1 + r/2}|
  std::int64_t max_coeff = 0;
  double c_r_witness = 0.0;       // count / (log(max_coeff) + 1)
  double c_r_configured = 0.0;
  bool pass = false;              // count <= c_r * (log(max_coeff) + 1)

  // sum |a_i| rho^{i-m} >= |a_m| prod_{|z_i| > rho} |z_i| / rho >= rho^count
  double chain_lhs = 0.0;
  double chain_mid = 0.0;
  double chain_rhs = 0.0;
  bool chain_holds = false;
  // sum |a_i| rho^{i-m} <= rho / (rho - 1) * max|a_i|
  bool geometric_bound_holds = false;
};

JensenCheck jensen_bound_check(const IntPoly& p, double r, double c_r,
                               const RootOptions& options = {},
                               double tolerance = 1e-6);
JensenCheck jensen_bound_check(const IntPoly& p, const RootSet& roots, double r,
                               double c_r, double tolerance = 1e-6);

struct MahlerCheck {
  double mahler = 0.0;        // |a_m| prod max(1, |z_i|)
  std::int64_t l1_norm = 0;
  int l = 0;
  bool pass = false;          // mahler <= l1_norm <= l
};

MahlerCheck mahler_check(const IntPoly& p, int l, const RootOptions& options = {},
                         double tolerance = 1e-9);
MahlerCheck mahler_check(const IntPoly& p, const RootSet& roots, int l,
                         double tolerance = 1e-9);

}  // namespace dioph
