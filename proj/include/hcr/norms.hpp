// SPDX-License-Identifier: MIT
//
// Measured L1 / L_inf kernel norms. The scaling theorems in this library
// are verified with measured constants, never assumed ones, so these small
// helpers are used everywhere a kernel norm feeds a bound.
#pragma once

#include "hcr/rank2.hpp"

namespace hcr {

struct KernelNorms {
    double l1 = 0.0;
    double linf = 0.0;
};

/// Norms of a rank-decomposed d=2 kernel on its quadrant-folded grid.
KernelNorms measure_norms(const Rank2Poly& f, double oversample);

/// Norms of a materialized polynomial (dense or streamed as needed).
KernelNorms measure_norms(const TrigPoly& f, double oversample);

}  // namespace hcr
