#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "dioph/annulus.hpp"
#include "dioph/errors.hpp"

namespace {

struct Case {
  double r;
  int l;
  int k;
};

class Decomposition : public ::testing::TestWithParam<Case> {};

double sector_area(const dioph::Region& g) {
  return 0.5 * (g.theta_hi - g.theta_lo) * (g.rho_hi * g.rho_hi - g.rho_lo * g.rho_lo);
}

}  // namespace

TEST_P(Decomposition, CellInvariants) {
  const auto [r, l, k] = GetParam();
  const auto d = dioph::decompose_annulus(r, l, k);
  const double scale = std::exp2(-static_cast<double>(l) / k);
  EXPECT_DOUBLE_EQ(d.scale, scale);
  EXPECT_DOUBLE_EQ(d.c, std::min(0.125, 1.0 / r - 1.0 - r));
  EXPECT_DOUBLE_EQ(d.C, 16.0 / (r * r));
  EXPECT_LE(static_cast<double>(d.N()), d.C * std::pow(4.0, static_cast<double>(l) / k));
  EXPECT_GE(d.c_achieved, d.c);
  double area = 0.0;
  for (const auto& g : d.regions) {
    EXPECT_LE(g.diameter, scale);
    EXPECT_GE(g.inner_radius, d.c * scale);
    EXPECT_GE(g.outer_radius, g.inner_radius);
    // The inscribed disk stays inside the cell.
    for (int s = 0; s < 16; ++s) {
      const auto z = g.center + std::polar(g.inner_radius, s * std::numbers::pi / 8);
      EXPECT_TRUE(g.contains(z, 1e-12));
    }
    area += sector_area(g);
  }
  const double annulus = std::numbers::pi * (1.0 / (r * r) - (1.0 + r) * (1.0 + r));
  EXPECT_GE(area, annulus * (1.0 - 1e-12));
}

TEST_P(Decomposition, CoversAnnulusGrid) {
  const auto [r, l, k] = GetParam();
  const auto d = dioph::decompose_annulus(r, l, k);
  // Index cells by shell, then by angle.
  std::map<double, std::vector<std::size_t>> shells;
  for (std::size_t i = 0; i < d.regions.size(); ++i) shells[d.regions[i].rho_lo].push_back(i);
  const double outer = 1.0 / r;
  const double h = r >= 0.5 ? 1e-3 : 4e-3;
  const long n = static_cast<long>(std::ceil(outer / h));
  long checked = 0;
  for (long i = -n; i <= n; ++i) {
    for (long j = -n; j <= n; ++j) {
      const std::complex<double> z(i * h, j * h);
      const double m = std::abs(z);
      if (m < 1.0 + r || m > outer) continue;
      ++checked;
      auto it = shells.upper_bound(m);
      ASSERT_NE(it, shells.begin());
      --it;
      bool found = false;
      for (int ds = 0; ds < 2 && !found; ++ds) {
        const auto& cells = it->second;
        double t = std::arg(z);
        if (t < 0) t += 2 * std::numbers::pi;
        const double dt = 2 * std::numbers::pi / static_cast<double>(cells.size());
        const long s = static_cast<long>(t / dt);
        const long nc = static_cast<long>(cells.size());
        for (long dj = -1; dj <= 1 && !found; ++dj) {
          const auto idx = cells[static_cast<std::size_t>(((s + dj) % nc + nc) % nc)];
          found = d.regions[idx].contains(z, 1e-12);
        }
        if (!found && it != shells.begin()) --it;
      }
      ASSERT_TRUE(found) << z;
    }
  }
  EXPECT_GT(checked, 0);
}

INSTANTIATE_TEST_SUITE_P(Annulus, Decomposition,
                         ::testing::Values(Case{0.5, 1, 1}, Case{0.5, 3, 1}, Case{0.5, 4, 2},
                                           Case{0.25, 3, 1}, Case{0.6, 2, 1}));

TEST(Decomposition, Locate) {
  const auto d = dioph::decompose_annulus(0.5, 2, 1);
  EXPECT_GE(d.locate({1.7, 0.2}), 0);
  EXPECT_GE(d.locate({1.5, 0.0}), 0);
  EXPECT_EQ(d.locate({1.2, 0.0}), -1);
  EXPECT_EQ(d.locate({2.5, 0.0}), -1);
}

TEST(Decomposition, RejectsBadParameters) {
  EXPECT_THROW(dioph::decompose_annulus(0.7, 2, 1), dioph::DomainError);
  EXPECT_THROW(dioph::decompose_annulus(0.5, 1, 2), dioph::DomainError);
  EXPECT_THROW(dioph::decompose_annulus(1.5, 2, 1), dioph::DomainError);
}
