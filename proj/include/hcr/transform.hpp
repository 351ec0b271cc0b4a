// SPDX-License-Identifier: MIT
//
// Grid evaluation and inversion for sparse trigonometric polynomials.
// Small grids are materialized; large grids are swept slice-by-slice with
// only the requested reductions retained. All reductions are deterministic:
// fixed slice order, per-slice accumulation, serial combination.
#pragma once

#include <functional>

#include "hcr/grid.hpp"
#include "hcr/trigpoly.hpp"

namespace hcr {

/// Power-of-two grid with G_j >= oversample * (2 maxdeg_j + 1).
Grid grid_for(const TrigPoly& f, double oversample, std::int64_t min_extent = 8);

/// Dense evaluation at all grid nodes. Throws resource_limit_error when the
/// sample array would exceed the configured memory budget (use
/// evaluate_reduced for such grids).
GridFunction evaluate_on_grid(const TrigPoly& f, const Grid& grid);

/// Exact discrete-orthogonality inversion restricted to `support`.
/// Requires G_j >= 2 maxdeg_j(support) + 1 (otherwise aliasing).
TrigPoly coefficients_from_grid(const GridFunction& samples, const IndexSet& support);

/// Streaming evaluation retaining only reductions; any grid size.
/// d == 2 streams slice-by-slice; d == 1 evaluates directly.
Reductions evaluate_reduced(const TrigPoly& f, const Grid& grid,
                            const ReductionSpec& spec);

/// Reductions of an already-materialized grid function.
Reductions reduce(const GridFunction& g, const ReductionSpec& spec);

namespace detail {

/// Deterministic candidate pool for the top `target` weighted cells.
class TopPool {
public:
    explicit TopPool(std::uint64_t target) : target_(target) {}

    void offer(double abs, std::uint64_t flat, std::uint32_t weight);
    void merge_into(std::vector<TopCell>& out) const;
    /// Final sorted, trimmed list covering at least `target` cells.
    static std::vector<TopCell> finalize(std::vector<TopCell> pool,
                                         std::uint64_t target);

private:
    std::uint64_t target_;
    std::uint64_t weight_ = 0;
    std::vector<TopCell> heap_;  // min-heap, weakest on top
};

bool stronger(const TopCell& a, const TopCell& b);

/// Runs fn(chunk_begin, chunk_end, thread_index) over a fixed partition of
/// [0, n) into worker_threads() contiguous chunks.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, unsigned)>& fn);

}  // namespace detail

}  // namespace hcr
