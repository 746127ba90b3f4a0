#include "dioph/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "dioph/errors.hpp"
#include "dioph/family.hpp"
#include "dioph/jensen.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

using Complex = std::complex<double>;

CoveringConstants CoveringConstants::defaults(double r, double a) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("covering constants: need 0 < r < 1");
  if (!(a > 1.0)) throw DomainError("covering constants: need a > 1");
  CoveringConstants c;
  c.r = r;
  c.a = a;
  c.c_region = region_disk_constant(r);
  c.c_gap = r * r / (16.0 * std::exp(1.0 / std::numbers::e));
  c.c_r = default_c_r(r);
  c.C = region_count_constant(r);
  return c.with_log_B(4.0 * std::log(2.0 / r) + 20.0 * c.c_r);
}

CoveringConstants CoveringConstants::with_log_B(double log_b) const {
  CoveringConstants c = *this;
  c.log_B = log_b;
  c.log_A = std::max(a * (log_b - std::log(c_gap)), std::log(2.0));
  return c;
}

double CoveringConstants::disk_radius(int l, int k) const {
  return std::exp2(-a * l / k);
}

namespace {

bool in_annulus(Complex z, double r) {
  const double m = std::abs(z);
  return m >= 1.0 + r && m <= 1.0 / r;
}

// Radius of a disk around each computed root whose union contains the
// sublevel set: (eps / |a_m|)^{1/m} plus the root inclusion radius.
double root_disk_radius(const IntPoly& p, const RootSet& roots, double log_eps) {
  const int m = p.degree();
  const double log_r =
      (log_eps - std::log(std::abs(static_cast<double>(p.leading())))) / m;
  return std::exp(log_r) + roots.inclusion_radius;
}

std::vector<Complex> relevant_centers(const RootSet& roots, double radius, double r) {
  std::vector<Complex> out;
  for (const auto& z : roots.roots) {
    const double m = std::abs(z);
    if (m + radius < 1.0 + r || m - radius > 1.0 / r) continue;
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  }
  return out;
}

SublevelSet sample_sublevel(const IntPoly& p, const RootSet& roots, double log_A,
                            int l, double r, double resolution,
                            const SublevelOptions& options) {
  SublevelSet s;
  s.p = p;
  s.log_A = log_A;
  s.l = l;
  s.r = r;
  s.resolution = resolution;
  if (p.degree() < 1) return s;  // |P| >= 1 > A^{-l}

  const double log_eps = -static_cast<double>(l) * log_A;
  s.root_disk_radius = root_disk_radius(p, roots, log_eps);
  s.root_centers = relevant_centers(roots, s.root_disk_radius, r);
  if (!std::isfinite(s.root_disk_radius)) {
    throw ResourceLimitError("sublevel_set: unbounded root disks for " + p.to_string(),
                             UINT64_MAX);
  }

  const double h = resolution;
  const double box = 1.0 / r;
  const double rad = s.root_disk_radius;
  double estimate = 0.0;
  for (const auto& z : s.root_centers) {
    const double span_x = std::min(z.real() + rad, box) - std::max(z.real() - rad, -box);
    const double span_y = std::min(z.imag() + rad, box) - std::max(z.imag() - rad, -box);
    estimate += (std::max(0.0, span_x) / h + 1.0) * (std::max(0.0, span_y) / h + 1.0);
  }
  if (estimate > static_cast<double>(options.max_points)) {
    throw ResourceLimitError(
        "sublevel_set: about " + std::to_string(static_cast<std::uint64_t>(estimate)) +
            " grid points for " + p.to_string() + " exceeds the guard of " +
            std::to_string(options.max_points),
        static_cast<std::uint64_t>(std::min(estimate, 1.8e19)));
  }

  std::vector<std::pair<long long, long long>> lattice;
  for (const auto& z : s.root_centers) {
    const auto i0 = static_cast<long long>(std::ceil(std::max(z.real() - rad, -box) / h));
    const auto i1 = static_cast<long long>(std::floor(std::min(z.real() + rad, box) / h));
    const auto j0 = static_cast<long long>(std::ceil(std::max(z.imag() - rad, -box) / h));
    const auto j1 = static_cast<long long>(std::floor(std::min(z.imag() + rad, box) / h));
    for (long long i = i0; i <= i1; ++i) {
      for (long long j = j0; j <= j1; ++j) {
        const Complex x(static_cast<double>(i) * h, static_cast<double>(j) * h);
        if (std::abs(x - z) > rad || !in_annulus(x, r)) continue;
        const double value = std::abs(p(x));
        if (value == 0.0 || std::log(value) < log_eps) lattice.emplace_back(i, j);
      }
    }
  }
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());
  s.grid_points.reserve(lattice.size());
  for (const auto& [i, j] : lattice) {
    s.grid_points.emplace_back(static_cast<double>(i) * h, static_cast<double>(j) * h);
  }
  return s;
}

void check_sublevel_args(const IntPoly& p, double log_A, double resolution) {
  if (p.is_zero()) throw std::invalid_argument("sublevel_set: P must be nonzero");
  if (!(log_A > 0.0)) throw DomainError("sublevel_set: need A > 1");
  if (!(resolution > 0.0)) throw DomainError("sublevel_set: resolution must be positive");
}

}  // namespace

SublevelSet sublevel_set_log(const IntPoly& p, double log_A, int l, double r,
                             double resolution, const SublevelOptions& options) {
  check_sublevel_args(p, log_A, resolution);
  const RootSet roots = p.degree() >= 1 ? find_roots(p, options.roots) : RootSet{};
  return sample_sublevel(p, roots, log_A, l, r, resolution, options);
}

SublevelSet sublevel_set(const IntPoly& p, double A, int l, double r,
                         double resolution, const SublevelOptions& options) {
  if (!(A > 1.0)) throw DomainError("sublevel_set: need A > 1");
  return sublevel_set_log(p, std::log(A), l, r, resolution, options);
}

CoverVerdict cover_with_disks(const SublevelSet& s, std::size_t max_disks,
                              double radius) {
  if (!(radius > 0.0)) throw DomainError("cover_with_disks: radius must be positive");
  CoverVerdict v;
  v.max_disks = max_disks;
  v.radius = radius;
  const auto& pts = s.grid_points;
  if (pts.empty()) {
    v.coverable = true;
    return v;
  }

  // Buckets of side `radius`; a disk touches at most the 3x3 neighbourhood.
  auto cell_of = [radius](Complex z) {
    return std::pair<long long, long long>(
        static_cast<long long>(std::floor(z.real() / radius)),
        static_cast<long long>(std::floor(z.imag() / radius)));
  };
  struct PairHash {
    std::size_t operator()(const std::pair<long long, long long>& c) const {
      return std::hash<long long>()(c.first * 1000003LL) ^ std::hash<long long>()(c.second);
    }
  };
  std::unordered_map<std::pair<long long, long long>, std::vector<std::size_t>, PairHash>
      buckets;
  for (std::size_t i = 0; i < pts.size(); ++i) buckets[cell_of(pts[i])].push_back(i);

  const std::size_t cap = 6 * max_disks + 1;
  std::vector<bool> covered(pts.size(), false);
  std::size_t next = 0;
  while (v.centers.size() < cap) {
    while (next < pts.size() && covered[next]) ++next;
    if (next == pts.size()) break;
    const Complex center = pts[next];
    if (v.centers.size() == max_disks) v.witness = center;
    v.centers.push_back(center);
    const auto [cx, cy] = cell_of(center);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        const auto it = buckets.find({cx + dx, cy + dy});
        if (it == buckets.end()) continue;
        for (std::size_t idx : it->second) {
          if (!covered[idx] && std::abs(pts[idx] - center) <= radius) covered[idx] = true;
        }
      }
    }
  }
  v.disks_used = v.centers.size();
  v.coverable = v.disks_used <= max_disks;
  v.optimal_lower_bound = (v.disks_used + 5) / 6;
  v.ambiguous = !v.coverable && v.optimal_lower_bound <= max_disks;
  if (!v.coverable) v.centers.resize(max_disks);
  return v;
}

CoverVerdict cover_polynomial(const IntPoly& p, const CoveringConstants& constants,
                              int l, int k, const SublevelOptions& options) {
  if (l < 1 || k < 1) throw DomainError("cover_polynomial: need l, k >= 1");
  const double radius = constants.disk_radius(l, k);
  const auto max_disks = static_cast<std::size_t>(2 * l);
  CoverVerdict v;
  v.radius = radius;
  v.max_disks = max_disks;
  if (p.is_zero()) {
    // Omega_{0,l} is the whole annulus.
    v.coverable = false;
    v.witness = Complex(1.0 + constants.r, 0.0);
    v.certified = true;
    v.disks_used = max_disks + 1;
    return v;
  }
  if (p.degree() < 1) {
    v.coverable = true;
    v.certified = true;
    return v;
  }
  const RootSet roots = find_roots(p, options.roots);
  const double log_eps = -static_cast<double>(l) * constants.log_A;
  const double rad = root_disk_radius(p, roots, log_eps);
  if (rad <= radius) {
    v.centers = relevant_centers(roots, rad, constants.r);
    v.disks_used = v.centers.size();
    v.coverable = v.disks_used <= max_disks;
    v.certified = true;
    v.optimal_lower_bound = v.coverable ? 0 : v.disks_used;
    if (v.coverable) return v;
  }
  const SublevelSet s =
      sample_sublevel(p, roots, constants.log_A, l, constants.r, radius / 4.0, options);
  return cover_with_disks(s, max_disks, radius);
}

ExceptionalCount classify_exceptional(int l, int k, const CoveringConstants& constants,
                                      const ClassifyOptions& options) {
  if (l < 1 || k < 1) throw DomainError("classify_exceptional: need l, k >= 1");
  const std::vector<IntPoly> family = enumerate_family(l, options.family_cap);
  std::vector<CoverVerdict> verdicts(family.size());
  parallel_blocks(family.size(), resolve_threads(options.threads),
                  [&](std::size_t begin, std::size_t end, unsigned) {
                    for (std::size_t i = begin; i < end; ++i) {
                      verdicts[i] = cover_polynomial(family[i], constants, l, k,
                                                     options.sublevel);
                    }
                  });

  ExceptionalCount out;
  out.l = l;
  out.k = k;
  out.family_size = family.size();
  out.C = constants.C;
  out.bound = constants.C * std::pow(10.0, static_cast<double>(l) / k);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (verdicts[i].coverable) continue;
    ++out.count_with_zero;
    if (verdicts[i].ambiguous) ++out.ambiguous;
    if (!family[i].is_zero()) out.members.push_back(family[i]);
  }
  out.count_without_zero = out.members.size();
  out.within_bound = static_cast<double>(out.count_with_zero) < out.bound;
  out.only_zero_expected = k > std::log(static_cast<double>(l));
  out.only_zero_holds = out.members.empty();
  if (options.keep_verdicts) {
    out.verdicts.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      out.verdicts.push_back({family[i], std::move(verdicts[i])});
    }
  }
  return out;
}

double region_sup_estimate(const IntPoly& p, const Region& region, int samples) {
  if (samples < 2) throw DomainError("region_sup_estimate: need at least 2 samples");
  if (p.is_zero()) return 0.0;
  const double d_rho = (region.rho_hi - region.rho_lo) / (samples - 1);
  const double d_theta = (region.theta_hi - region.theta_lo) / (samples - 1);
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      const Complex x = std::polar(region.rho_lo + i * d_rho, region.theta_lo + j * d_theta);
      sup = std::max(sup, std::abs(p(x)));
    }
  }
  // Taylor coefficients at the center bound |P| and |P'| on the disk of
  // radius outer_radius, which contains the region.
  using LC = std::complex<long double>;
  const auto coeffs = p.coeffs();
  std::vector<LC> d(coeffs.begin(), coeffs.end());
  const LC c(region.center.real(), region.center.imag());
  const std::size_t n = d.size() - 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n; i-- > k;) d[i] += c * d[i + 1];
  }
  const long double R = region.outer_radius;
  long double disk_sup = 0.0L;
  long double disk_lip = 0.0L;
  long double power = 1.0L;
  for (std::size_t j = 0; j <= n; ++j) {
    disk_sup += std::abs(d[j]) * power;
    if (j + 1 <= n) disk_lip += static_cast<long double>(j + 1) * std::abs(d[j + 1]) * power;
    power *= R;
  }
  // Rounding in the shift is at most a few ulps of sum |a_i| |c|^i per step.
  const double noise = 4.0 * static_cast<double>(n + 1) *
                       std::numeric_limits<double>::epsilon() *
                       p.abs_evaluate(std::abs(region.center));
  const double lipschitz = std::min(p.derivative().abs_evaluate(region.rho_hi),
                                    static_cast<double>(disk_lip) + noise);
  const double gap = 0.5 * std::hypot(d_rho, region.rho_hi * d_theta);
  return std::min(sup + lipschitz * gap, static_cast<double>(disk_sup) + noise);
}

bool region_smallness_test(const IntPoly& p, const Region& region, double log_B, int l,
                           int samples) {
  if (!(log_B > 0.0)) throw DomainError("region_smallness_test: need B > 1");
  if (p.is_zero()) return true;
  const double log_threshold = -static_cast<double>(l) * log_B;
  // Cheap rejection at the center before the full sample grid.
  if (std::log(std::abs(p(region.center))) > log_threshold) return false;
  const double sup = region_sup_estimate(p, region, samples);
  return sup == 0.0 || std::log(sup) <= log_threshold;
}

std::optional<std::size_t> find_small_region(const IntPoly& p,
                                             const AnnulusDecomposition& decomposition,
                                             double log_B, int l, int samples) {
  for (std::size_t i = 0; i < decomposition.regions.size(); ++i) {
    if (region_smallness_test(p, decomposition.regions[i], log_B, l, samples)) return i;
  }
  return std::nullopt;
}

double separation_log_C(double r, double c, int l, int m, int M) {
  double log_lower = -std::log(2.0) + m * std::log(r / 2.0);
  if (M > 0) log_lower += M * (std::log(c) - 0.5 * std::log(static_cast<double>(M)));
  return -log_lower / l;
}

double separation_required_log_B(const CoveringConstants& constants, int l, int k) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int M = 0; M <= 2 * l; ++M) {
    worst = std::max(worst, separation_log_C(constants.r, constants.c_region, l, 2 * l, M));
  }
  return worst + constants.c_r * std::log(2.0) * (10.0 + 1.0 / k);
}

BoundReport coefficient_gap_check(const IntPoly& p, const IntPoly& q,
                                  const Region& region, double log_B, int l, int k,
                                  const CoveringConstants& constants,
                                  const RootOptions& options) {
  if (p == q) throw std::invalid_argument("coefficient_gap_check: P and Q must differ");
  const IntPoly diff = p - q;
  BoundReport report;
  report.quantity = "sup-norm of P - Q";
  report.bound = std::exp(10.0 * k);
  report.measured = static_cast<double>(diff.max_abs_coeff());
  report.pass = report.measured > report.bound;

  int large = 0;
  if (diff.degree() >= 1) {
    const RootSet roots = find_roots(diff, options);
    for (const auto& z : roots.roots) {
      if (std::abs(z) > 1.0 + constants.r / 2.0) ++large;
    }
  }
  const int m = std::max(0, diff.degree());
  const double log_c = separation_log_C(constants.r, constants.c_region, l, m, large);
  const double m_lower = k * (log_B - log_c) / std::log(2.0);
  const double required = separation_required_log_B(constants, l, k);
  report.details = {
      {"M", static_cast<double>(large)},
      {"M_lower", m_lower},
      {"degree", static_cast<double>(m)},
      {"log_C", log_c},
      {"log_B", log_B},
      {"log_B_required", required},
      {"region_center_re", region.center.real()},
      {"region_center_im", region.center.imag()},
  };
  if (report.pass) {
    report.note = "separated";
  } else if (log_B < required) {
    report.note = "parameter-threshold: B below the separation requirement";
  } else {
    report.note = "unexplained";
  }
  return report;
}

SeparationSweep separation_sweep(int l, int k, const CoveringConstants& constants,
                                 double log_B, int samples, int family_cap) {
  const AnnulusDecomposition decomposition = decompose_annulus(constants.r, l, k);
  const std::vector<IntPoly> family = enumerate_family(l, family_cap);
  SeparationSweep out;
  out.l = l;
  out.k = k;
  out.log_B = log_B;
  out.regions = decomposition.N();
  for (std::size_t i = 0; i < decomposition.regions.size(); ++i) {
    const Region& region = decomposition.regions[i];
    std::vector<const IntPoly*> members;
    for (const auto& p : family) {
      if (region_smallness_test(p, region, log_B, l, samples)) members.push_back(&p);
    }
    out.largest_class = std::max(out.largest_class, members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ++out.pairs_checked;
        BoundReport rep = coefficient_gap_check(*members[a], *members[b], region, log_B,
                                                l, k, constants);
        if (rep.pass) {
          ++out.pairs_passed;
          continue;
        }
        SeparationPair pair{i, *members[a], *members[b], std::move(rep)};
        if (pair.report.note == "unexplained") {
          out.unexplained_failures.push_back(std::move(pair));
        } else {
          out.threshold_exceptions.push_back(std::move(pair));
        }
      }
    }
  }
  return out;
}

}  // namespace dioph
