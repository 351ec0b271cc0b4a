// SPDX-License-Identifier: MIT
//
// Sums of tensor products u_r(x1) * v_r(x2) with real, coordinate-even
// univariate factors. Every kernel this library builds in d = 2 has this
// shape, and |f| inherits the per-axis reflection symmetry, so norms and
// level statistics are computed on one quadrant of the grid with cell
// multiplicities. This is what makes 2^18 x 2^18 grids affordable.
#pragma once

#include "hcr/transform.hpp"

namespace hcr {

struct RankTerm {
    double coef = 1.0;
    TrigPoly u;  // univariate, real even
    TrigPoly v;  // univariate, real even
};

struct Rank2Poly {
    std::vector<RankTerm> terms;

    std::int64_t max_degree(int axis) const;
    /// Coefficient of the represented 2-D polynomial at k.
    cplx coeff(const Freq& k) const;
    /// Expand into a flat sparse polynomial (cap-checked).
    TrigPoly to_trigpoly() const;
    /// Grid for norm evaluation at the given oversampling factor.
    Grid eval_grid(double oversample) const;
};

/// Quadrant-folded streaming reductions of a rank-decomposed polynomial.
/// Requires even grid extents and real-even factors.
Reductions rank2_reduce(const Rank2Poly& f, const Grid& grid,
                        const ReductionSpec& spec);

}  // namespace hcr
