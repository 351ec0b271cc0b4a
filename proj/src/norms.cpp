// SPDX-License-Identifier: MIT

#include "hcr/norms.hpp"

namespace hcr {

KernelNorms measure_norms(const Rank2Poly& f, double oversample) {
    ReductionSpec spec;
    spec.p_list = {1.0};
    spec.top_cells = 1;
    const Reductions red = rank2_reduce(f, f.eval_grid(oversample), spec);
    return {red.norm(1.0), red.max_abs};
}

KernelNorms measure_norms(const TrigPoly& f, double oversample) {
    ReductionSpec spec;
    spec.p_list = {1.0};
    spec.top_cells = 1;
    const Reductions red = evaluate_reduced(f, grid_for(f, oversample), spec);
    return {red.norm(1.0), red.max_abs};
}

}  // namespace hcr
