// SPDX-License-Identifier: MIT
//
// Uniform tensor grids over the torus with normalized measure, materialized
// sample arrays, cell-union measurable sets, and streamed reductions for
// grids too large to hold.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcr/config.hpp"

namespace hcr {

struct Grid {
    int dim = 1;
    std::array<std::int64_t, kMaxDim> size{1, 1, 1};

    std::int64_t extent(int axis) const { return size[std::size_t(axis)]; }
    std::int64_t total() const {
        std::int64_t t = 1;
        for (int j = 0; j < dim; ++j) t *= size[std::size_t(j)];
        return t;
    }
    /// Node coordinate 2*pi*t/G_axis.
    double point(int axis, std::int64_t t) const {
        return kTwoPi * double(t) / double(size[std::size_t(axis)]);
    }
    friend bool operator==(const Grid&, const Grid&) = default;
};

inline Grid grid1(std::int64_t g0) { return Grid{1, {g0, 1, 1}}; }
inline Grid grid2(std::int64_t g0, std::int64_t g1) { return Grid{2, {g0, g1, 1}}; }

/// Materialized complex samples, row-major with the last axis fastest.
struct GridFunction {
    Grid grid;
    std::vector<std::complex<double>> values;
};

/// A measurable set restricted to unions of grid cells.
class GridSet {
public:
    GridSet() = default;
    GridSet(Grid grid, std::vector<std::uint8_t> mask);

    static GridSet empty(const Grid& g);
    static GridSet full(const Grid& g);

    const Grid& grid() const { return grid_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    bool contains(std::int64_t flat) const { return mask_[std::size_t(flat)] != 0; }
    std::int64_t count() const { return count_; }
    /// Exact cell fraction.
    double measure() const { return double(count_) / double(grid_.total()); }

    GridSet complement() const;

    /// Run-length encoding: "d G1 [G2 [G3]]" header, then "start length"
    /// lines for maximal true runs in flat order.
    std::string to_rle() const;
    static GridSet from_rle(const std::string& text);

private:
    Grid grid_;
    std::vector<std::uint8_t> mask_;
    std::int64_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Streamed reductions
// ---------------------------------------------------------------------------

/// What a streaming evaluation pass must retain.
struct ReductionSpec {
    std::vector<double> p_list;   // finite exponents for power sums
    std::uint64_t top_cells = 1;  // retain at least this many largest-|v| cells
};

/// One retained cell value. weight > 1 means the value occurs at `weight`
/// grid cells (symmetry folding); `flat` is a representative index.
struct TopCell {
    double abs = 0.0;
    std::uint64_t flat = 0;
    std::uint32_t weight = 1;
};

struct Reductions {
    std::uint64_t total_cells = 0;
    double max_abs = 0.0;
    std::uint64_t argmax = 0;
    std::vector<double> p_list;
    std::vector<double> power_sums;  // sum over cells of |v|^p, same order as p_list
    std::vector<TopCell> top;        // sorted by (abs desc, flat asc)

    double power_sum(double p) const;
    /// L_p norm under normalized measure from the retained sums.
    double norm(double p) const;
    /// Largest |v| outside the `budget_cells` top cells.
    double sup_outside_top(std::uint64_t budget_cells) const;
    /// L_p norm over the complement of the top `budget_cells` cells
    /// (normalized by the full cell count).
    double norm_outside_top(double p, std::uint64_t budget_cells) const;
    /// Retained depth: the number of cells covered by `top`.
    std::uint64_t retained_cells() const;
};

}  // namespace hcr
