#pragma once

#include "dioph/affine.hpp"
#include "dioph/annulus.hpp"
#include "dioph/ball.hpp"
#include "dioph/bound_report.hpp"
#include "dioph/covering.hpp"
#include "dioph/errors.hpp"
#include "dioph/family.hpp"
#include "dioph/gaussian_rational.hpp"
#include "dioph/hausdorff.hpp"
#include "dioph/int_poly.hpp"
#include "dioph/jensen.hpp"
#include "dioph/roots.hpp"

namespace dioph {

inline constexpr const char* kVersion = DIOPH_VERSION_STRING;

}  // namespace dioph
