// SPDX-License-Identifier: MIT
//
// Discretization inequalities: measured sup-norm recovery constants for
// candidate point sets, and the shift-search argument that turns a
// shift-uniform discretization inequality into a sup-norm Remez inequality.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hcr/grid.hpp"
#include "hcr/rng.hpp"
#include "hcr/trigpoly.hpp"

namespace hcr {

using TorusPoint = std::array<double, kMaxDim>;

struct PointSet {
    int dim = 1;
    std::vector<TorusPoint> points;  // coordinates in [0, 2pi)

    std::size_t size() const { return points.size(); }
};

struct DiscretizationConstant {
    double D = 0.0;
    bool infinite = false;  // every node sample vanished
    double sup = 0.0;       // max(grid sup, node max)
    double node_max = 0.0;
};

/// ||f||_inf / max_j |f(x^j)|. The sup estimate includes the node values,
/// so D >= 1 whenever it is finite.
DiscretizationConstant discretization_constant(const TrigPoly& f, const PointSet& X,
                                               double oversample = 8.0);

/// Union over ||s||_1 = n of tensor-product equispaced grids with
/// 2^{s_j} + 1 points per axis, deduplicated.
PointSet candidate_point_set(int n, int dim);

struct DiscretizationScan {
    int n = 0;
    int dim = 1;
    std::size_t m = 0;       // |X|
    double max_D = 0.0;
    double rate = 0.0;       // n^{d-1}
    double ratio = 0.0;      // max_D / rate
    bool any_infinite = false;
};

/// Max discretization constant over seeded random polynomials in T(Q_n).
DiscretizationScan empirical_discretization_scan(int n, int dim, int draws,
                                                 std::uint64_t seed);

struct ShiftResult {
    bool found = false;
    TorusPoint y{0, 0, 0};
};

/// A shift y* with x^j - y* outside B for every j. Exists whenever
/// |B| < 1/m. Points aligned to B's grid use an exact cell scan; otherwise
/// an exact sweep over translated box edges is used (d <= 2).
ShiftResult find_avoiding_shift(const PointSet& X, const GridSet& B);

struct RemezFromDiscretization {
    bool ok = false;
    double D = 0.0;             // shift-uniform constant actually certified
    TorusPoint shift{0, 0, 0};  // y*
    double sup = 0.0;
    double sup_outside = 0.0;
    std::optional<TorusPoint> violating_shift;  // shift-uniformity failure
};

/// The full pipeline: check the discretization inequality with constant D
/// on a grid of shifts (reporting a violator if any), find an avoiding
/// shift for B, and re-verify ||f||_inf <= D sup_{B^c} |f| on the full grid.
RemezFromDiscretization discretization_to_remez(const TrigPoly& f, const PointSet& X,
                                                double D, const GridSet& B,
                                                std::int64_t shift_grid_per_axis = 32,
                                                double oversample = 8.0);

}  // namespace hcr
