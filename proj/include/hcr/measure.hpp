// SPDX-License-Identifier: MIT
//
// L_p (quasi-)norms under normalized measure, set-restricted norms, extremal
// level sets and quantiles of |f| over grid functions. Measurable sets are
// unions of grid cells; the extremal deletion set of every ratio problem in
// this library is a level set of |f|, which cell unions represent exactly on
// the grid.
#pragma once

#include "hcr/grid.hpp"

namespace hcr {

/// (sum |g|^p / #cells)^{1/p} for finite p > 0; max |g| for p = infinity.
double lp_norm(const GridFunction& g, double p);

/// Norm over unmasked cells only; measure still normalized by the total
/// cell count (restriction of the normalized measure).
double lp_norm_excluding(const GridFunction& g, double p, const GridSet& B);

/// Mask of the floor(b * #cells) cells of largest |g|; ties broken by flat
/// cell order, so the result is unique and reproducible.
GridSet top_level_set(const GridFunction& g, double b);

/// Value v with  fraction(|g| > v) <= 1-q  and  fraction(|g| >= v) >= 1-q.
double quantile_abs(const GridFunction& g, double q);

}  // namespace hcr
