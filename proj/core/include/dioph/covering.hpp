#pragma once

// Sublevel sets Omega_{P,l} = {x : |P(x)| < A^{-l}, 1 + r <= |x| <= 1/r},
// greedy disk covers of them, and the exceptional families
//
//   Q_{l,k}   = {P in P_l : Omega_{P,l} not coverable by 2l disks of radius 2^{-al/k}}
//   Q_{l,k,i} = {P in P_l : |P| <= B^{-l} on the region X_i}.
//
// A and B are astronomically large at their default values, so every
// threshold is carried as a natural logarithm.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "dioph/annulus.hpp"
#include "dioph/bound_report.hpp"
#include "dioph/int_poly.hpp"
#include "dioph/roots.hpp"

namespace dioph {

struct CoveringConstants {
  double r = 0.5;
  double a = 4.0;
  double c_region = 0.125;  // inscribed-disk constant of the decomposition
  double c_gap = 0.0;       // r^2 / (16 e^{1/e}), bounds r^2 / (16 l^{1/l})
  double c_r = 0.0;         // root-count constant, default_c_r(r)
  double log_B = 0.0;       // 4 log(2/r) + 20 C_r
  double log_A = 0.0;       // max(a (log B - log c_gap), log 2)
  double C = 0.0;           // 16 / r^2, shared by region and class counts

  static CoveringConstants defaults(double r = 0.5, double a = 4.0);
  // Recomputes log_A from log_B as in defaults().
  CoveringConstants with_log_B(double log_b) const;
  CoveringConstants with_log_A(double log_a) const {
    CoveringConstants c = *this;
    c.log_A = log_a;
    return c;
  }
  // 2^{-a l / k}
  double disk_radius(int l, int k) const;
};

struct SublevelOptions {
  std::size_t max_points = 20'000'000;
  RootOptions roots;
};

struct SublevelSet {
  IntPoly p;
  double log_A = 0.0;
  int l = 0;
  double r = 0.0;
  double resolution = 0.0;
  // Lattice points (i h, j h) of the annulus where |P| < A^{-l}, sorted.
  std::vector<std::complex<double>> grid_points;
  // The set lies in the union of disks of this radius around these centers.
  std::vector<std::complex<double>> root_centers;
  double root_disk_radius = 0.0;
};

// Throws std::invalid_argument for P = 0 and DomainError unless A > 1 and
// resolution > 0. Only lattice points within root_disk_radius of a root are
// evaluated; no other lattice point can satisfy the inequality.
SublevelSet sublevel_set_log(const IntPoly& p, double log_A, int l, double r,
                             double resolution, const SublevelOptions& options = {});
SublevelSet sublevel_set(const IntPoly& p, double A, int l, double r,
                         double resolution, const SublevelOptions& options = {});

struct CoverVerdict {
  bool coverable = false;
  std::size_t disks_used = 0;
  std::size_t max_disks = 0;
  double radius = 0.0;
  std::optional<std::complex<double>> witness;
  std::vector<std::complex<double>> centers;
  // Covered analytically by disks around the roots.
  bool certified = false;
  // Greedy centers are pairwise more than `radius` apart, so an optimal
  // cover needs at least ceil(greedy / 6) disks. When that lower bound is
  // within max_disks the negative verdict is greedy-dependent.
  std::size_t optimal_lower_bound = 0;
  bool ambiguous = false;
};

// Greedy: take the first uncovered grid point as a center, absorb every grid
// point within radius, repeat.
CoverVerdict cover_with_disks(const SublevelSet& s, std::size_t max_disks,
                              double radius);

// Full pipeline for one polynomial: the root-disk certificate when the
// sublevel radius is below 2^{-al/k}, otherwise sampling at a quarter of
// the disk radius and greedy covering. P = 0 is never coverable.
CoverVerdict cover_polynomial(const IntPoly& p, const CoveringConstants& constants,
                              int l, int k, const SublevelOptions& options = {});

struct PolyVerdict {
  IntPoly p;
  CoverVerdict verdict;
};

struct ExceptionalCount {
  int l = 0;
  int k = 0;
  std::vector<IntPoly> members;  // nonzero members of Q_{l,k}
  std::size_t count_with_zero = 0;
  std::size_t count_without_zero = 0;
  std::size_t ambiguous = 0;
  std::size_t family_size = 0;
  double C = 0.0;
  double bound = 0.0;  // C * 10^{l/k}
  bool within_bound = false;
  bool only_zero_expected = false;  // k > log l
  bool only_zero_holds = false;
  std::vector<PolyVerdict> verdicts;  // filled when requested
};

struct ClassifyOptions {
  SublevelOptions sublevel;
  int family_cap = 7;
  unsigned threads = 0;
  bool keep_verdicts = false;
};

ExceptionalCount classify_exceptional(int l, int k, const CoveringConstants& constants,
                                      const ClassifyOptions& options = {});

// Largest sampled |P| on the region plus a Lipschitz margin for the
// unsampled points.
double region_sup_estimate(const IntPoly& p, const Region& region, int samples);

// True iff region_sup_estimate(p, region, samples) <= B^{-l}.
bool region_smallness_test(const IntPoly& p, const Region& region, double log_B,
                           int l, int samples = 9);

// Index of a region where the smallness test holds, if any.
std::optional<std::size_t> find_small_region(const IntPoly& p,
                                             const AnnulusDecomposition& decomposition,
                                             double log_B, int l, int samples = 9);

// log C with (1/2)(r/2)^m (c / sqrt M)^M = C^{-l}.
double separation_log_C(double r, double c, int l, int m, int M);

// Smallest log B for which P != Q in a common Q_{l,k,i} forces
// |P - Q|_inf > e^{10k}, using the worst case m = M = 2l.
double separation_required_log_B(const CoveringConstants& constants, int l, int k);

// |P - Q|_inf > e^{10k}. Details record M (roots of P - Q outside
// |x| = 1 + r/2), its lower bound k (log B - log C) / log 2, and whether B
// clears separation_required_log_B. Throws std::invalid_argument if P == Q.
BoundReport coefficient_gap_check(const IntPoly& p, const IntPoly& q,
                                  const Region& region, double log_B, int l, int k,
                                  const CoveringConstants& constants,
                                  const RootOptions& options = {});

struct SeparationPair {
  std::size_t region = 0;
  IntPoly p;
  IntPoly q;
  BoundReport report;
};

struct SeparationSweep {
  int l = 0;
  int k = 0;
  double log_B = 0.0;
  std::size_t regions = 0;
  std::size_t largest_class = 0;  // max_i |Q_{l,k,i}|, zero included
  std::size_t pairs_checked = 0;
  std::size_t pairs_passed = 0;
  std::vector<SeparationPair> threshold_exceptions;
  std::vector<SeparationPair> unexplained_failures;
};

// Builds every Q_{l,k,i} by sampling and checks each pair within a class.
SeparationSweep separation_sweep(int l, int k, const CoveringConstants& constants,
                                 double log_B, int samples = 9,
                                 int family_cap = 7);

}  // namespace dioph
