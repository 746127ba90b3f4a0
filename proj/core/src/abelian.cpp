#include <cmath>

#include "dioph/ball.hpp"
#include "dioph/errors.hpp"

namespace dioph {

AbelianGap abelian_gap(double x, std::int64_t l) {
  if (!(std::abs(x) > 0.0 && std::abs(x) < 1.0)) {
    throw DomainError("abelian_gap: requires 0 < |x| < 1");
  }
  if (l < 1) throw DomainError("abelian_gap: requires l >= 1");
  const bool flip = x < 0.0;
  const double y = std::abs(x);

  AbelianGap best{1.0, 0, 1};
  for (std::int64_t m = 1; m <= l; ++m) {
    const std::int64_t room = l - m;
    const double target = static_cast<double>(m) * y;
    const auto lo = static_cast<std::int64_t>(std::floor(target));
    for (std::int64_t p : {lo, lo + 1}) {
      const std::int64_t q = p > room ? room : p;  // n = -q, |n| <= room
      const double value = std::abs(static_cast<double>(m) * y -
                                    static_cast<double>(q));
      if (value < best.value) best = {value, m, -q};
    }
  }
  if (flip) best.n = -best.n;
  if (best.m == 0) best.n = 1;
  return best;
}

}  // namespace dioph
