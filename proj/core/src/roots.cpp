#include "dioph/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace dioph {

namespace {

using C = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Poly {
  std::vector<double> a;  // low to high, nonzero constant and leading terms

  int degree() const { return static_cast<int>(a.size()) - 1; }

  void eval(C z, C& value, C& deriv) const {
    value = a.back();
    deriv = 0.0;
    for (int i = degree() - 1; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + a[static_cast<std::size_t>(i)];
    }
  }
  C value(C z) const {
    C v = a.back();
    for (int i = degree() - 1; i >= 0; --i) v = v * z + a[static_cast<std::size_t>(i)];
    return v;
  }
  // Rounding-level bound on the error of value(z).
  double noise(C z) const {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + std::abs(*it);
    return 8.0 * kEps * acc * (degree() + 1);
  }
};

std::vector<C> starting_points(const Poly& p, std::uint64_t seed) {
  const int n = p.degree();
  // Geometric mean of the root moduli, |a_0 / a_n|^{1/n}.
  const double radius =
      std::pow(std::abs(p.a.front() / p.a.back()), 1.0 / n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double offset = 2.0 * std::numbers::pi * unit(rng);
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = offset + 2.0 * std::numbers::pi * j / n + 0.4 / n;
    const double rho = radius * (1.0 + 0.05 * (unit(rng) - 0.5));
    z[static_cast<std::size_t>(j)] = std::polar(rho, theta);
  }
  return z;
}

// Returns true when every root reached a rounding-level residual.
bool aberth(const Poly& p, std::vector<C>& z, int max_iterations, int& used) {
  const std::size_t n = z.size();
  std::vector<bool> settled(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    used = it + 1;
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (settled[i]) continue;
      C value;
      C deriv;
      p.eval(z[i], value, deriv);
      if (std::abs(value) <= p.noise(z[i])) {
        settled[i] = true;
        continue;
      }
      all = false;
      const C newton = value / deriv;
      C repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const C step = newton / (1.0 - newton * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
      } else {
        z[i] += C(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
      }
    }
    if (all) return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(p.value(z[i])) > p.noise(z[i])) return false;
  }
  return true;
}

std::vector<C> companion_roots(const Poly& p) {
  const int n = p.degree();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p.a[static_cast<std::size_t>(i)] / p.a.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  return z;
}

// A few Newton steps that are only kept when they lower the residual.
void polish(const Poly& p, std::vector<C>& z) {
  for (auto& zi : z) {
    for (int s = 0; s < 5; ++s) {
      C value;
      C deriv;
      p.eval(zi, value, deriv);
      if (deriv == C(0.0)) break;
      const C next = zi - value / deriv;
      if (std::abs(p.value(next)) < std::abs(value)) {
        zi = next;
      } else {
        break;
      }
    }
  }
}

}  // namespace

namespace {

// Relative l-infinity distance between q and a_n prod (x - z_i).
double coefficient_error(const Poly& q, const std::vector<C>& z) {
  std::vector<std::complex<long double>> c{static_cast<long double>(q.a.back())};
  for (C root : z) {
    const std::complex<long double> w(root.real(), root.imag());
    c.push_back(0.0L);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - w * c[i];
    c[0] = -w * c[0];
  }
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < q.a.size(); ++i) {
    scale = std::max(scale, std::abs(q.a[i]));
    err = std::max(err, static_cast<double>(std::abs(c[i] - static_cast<long double>(q.a[i]))));
  }
  return scale > 0.0 ? err / scale : err;
}

}  // namespace

RootSet find_roots(const IntPoly& p, const RootOptions& options) {
  if (p.is_zero()) {
    throw std::invalid_argument("find_roots: the zero polynomial has no root set");
  }
  RootSet out;
  out.leading = p.leading();
  const int zeros = p.low_order();
  out.roots.assign(static_cast<std::size_t>(zeros), C(0.0));

  Poly q;
  for (int i = zeros; i <= p.degree(); ++i) {
    q.a.push_back(static_cast<double>(p.coeff(i)));
  }
  std::vector<C> z;
  if (q.degree() == 1) {
    z.push_back(-q.a[0] / q.a[1]);
  } else if (q.degree() > 1) {
    z = starting_points(q, options.seed);
    bool ok = aberth(q, z, options.max_iterations, out.iterations);
    if (ok && coefficient_error(q, z) > 1e-12) {
      // Clustered roots can meet the residual test individually while the
      // cluster as a whole is skewed; the companion eigenvalues usually
      // reproduce the coefficients better there.
      std::vector<C> raw = companion_roots(q);
      std::vector<C> polished = raw;
      polish(q, polished);
      for (auto* cand : {&raw, &polished}) {
        if (coefficient_error(q, *cand) < coefficient_error(q, z)) {
          z = *cand;
          out.used_companion_fallback = true;
        }
      }
    }
    if (!ok) {
      std::vector<C> alt = companion_roots(q);
      polish(q, alt);
      out.used_companion_fallback = true;
      ok = std::all_of(alt.begin(), alt.end(), [&](C w) {
        return std::abs(q.value(w)) <= 1e6 * q.noise(w);
      });
      z = std::move(alt);
      if (!ok) {
        out.roots.insert(out.roots.end(), z.begin(), z.end());
        throw RootFindingError("find_roots: no convergence for " + p.to_string(),
                               out);
      }
    }
  }
  // Sort for reproducible output: by real part, then imaginary part.
  std::sort(z.begin(), z.end(), [](C u, C v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  out.roots.insert(out.roots.end(), z.begin(), z.end());

  double max_residual = 0.0;
  for (const auto& zi : out.roots) max_residual = std::max(max_residual, std::abs(p(zi)));
  out.residual_bound = max_residual;

  // Zero roots are exact, so only the deflated factor needs an inclusion radius.
  const auto n = z.size();
  double max_correction = 0.0;
  const double lead = static_cast<double>(out.leading);
  for (std::size_t i = 0; i < n; ++i) {
    const C value = q.value(z[i]);
    C denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= z[i] - z[j];
    }
    const double correction =
        value == C(0.0) ? 0.0
                        : (denom == C(0.0) ? std::numeric_limits<double>::infinity()
                                           : std::abs(value / denom));
    max_correction = std::max(max_correction, correction);
  }
  double radius = static_cast<double>(n) * max_correction;

  // Perturbation bound, robust to clusters: a true root w of q satisfies
  // |lead| min_j |w - z_j|^n <= |(q~ - q)(w)| with q~ = lead * prod (x - z_j).
  if (n > 0) {
    long double cauchy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      cauchy = std::max(cauchy, std::abs(static_cast<long double>(q.a[i]) / q.a[n]));
    }
    cauchy += 1.0L;
    std::vector<std::complex<long double>> c{static_cast<long double>(lead)};
    for (const auto& w : z) {
      const std::complex<long double> wl(w.real(), w.imag());
      std::vector<std::complex<long double>> next(c.size() + 1, 0.0L);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * wl;
      }
      c = std::move(next);
    }
    long double delta = 0.0L;
    long double power = 1.0L;
    for (std::size_t i = 0; i <= n; ++i) {
      const long double d = std::abs(c[i] - static_cast<long double>(q.a[i]));
      // Rounding of the long double product itself.
      delta += (d + 8.0L * (n + 1) * std::numeric_limits<long double>::epsilon() *
                        std::abs(c[i])) *
               power;
      power *= cauchy;
    }
    const double perturb = static_cast<double>(
        std::pow(delta / std::abs(static_cast<long double>(lead)), 1.0L / n));
    radius = std::min(radius, perturb);
  }
  out.inclusion_radius = radius;
  return out;
}

std::vector<std::complex<long double>> reconstruct_coefficients(const RootSet& roots) {
  std::vector<std::complex<long double>> c{static_cast<long double>(roots.leading)};
  for (const auto& z : roots.roots) {
    const std::complex<long double> zl(z.real(), z.imag());
    std::vector<std::complex<long double>> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * zl;
    }
    c = std::move(next);
  }
  return c;
}

double reconstruction_error(const IntPoly& p, const RootSet& roots) {
  const auto c = reconstruct_coefficients(roots);
  long double err = 0.0L;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto target = static_cast<long double>(p.coeff(static_cast<int>(i)));
    err = std::max(err, std::abs(c[i] - target));
  }
  return static_cast<double>(err / static_cast<long double>(p.max_abs_coeff()));
}

}  // namespace dioph
