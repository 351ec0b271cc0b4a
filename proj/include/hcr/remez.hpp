// SPDX-License-Identifier: MIT
//
// Exact extremal Remez ratios on grids: the global L_p norm against the
// L_p norm off the worst cell-union set of prescribed measure, reference
// constants for the univariate and box cases, and executable checkers for
// the implications connecting Remez-type and Nikolskii-type inequalities.
//
// A note on budgets: on an M-cell grid a measurable set of measure <= b
// contains at most floor(b*M) cells, so checkers whose proof needs the
// deleted measure exactly use the effective budget floor(b*M)/M. With that
// convention every implication below holds exactly on grid functions; the
// epsilons only absorb floating-point rounding.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hcr/measure.hpp"
#include "hcr/norms.hpp"
#include "hcr/rng.hpp"
#include "hcr/transform.hpp"

namespace hcr {

struct RemezReport {
    double ratio = 1.0;
    bool infinite = false;      // norm outside the extremal set vanished
    double norm_total = 0.0;
    double norm_outside = 0.0;
    std::uint64_t budget_cells = 0;
    std::uint64_t total_cells = 0;
    double effective_budget = 0.0;  // budget_cells / total_cells
    std::string extremal_ref;       // RLE mask when small, summary otherwise
};

/// Extremal ratio ||g||_p / ||g||_{p, off B*} with B* the top level set of
/// measure floor(b*M)/M. This maximizes the ratio over all cell-union sets
/// of measure <= b.
RemezReport remez_ratio(const GridFunction& g, double b, double p);

/// Same, from streamed reductions (the pass must have retained
/// floor(b*M)+1 top cells and the exponent p when finite).
RemezReport remez_ratio_reduced(const Reductions& red, double b, double p);

/// Streaming evaluation + ratio in one call (for grids beyond the budget).
RemezReport remez_ratio_stream(const TrigPoly& f, const Grid& grid, double b,
                               double p);

enum class RemezRegime { small_measure, large_measure, multivariate_box };

/// Reference constants: exp(2n|B|) for d=1, |B| < pi/2;
/// (17/(2pi-|B|))^{2n} for pi/2 <= |B| < 2pi; and the box-polynomial
/// constant exp(2d(|B| prod n_j)^{1/d}) under its admissibility condition.
/// |B| is in [0,2pi)^d units here, unlike the normalized budgets elsewhere.
double remez_bound_reference(const std::vector<std::int64_t>& degrees,
                             double B_measure, RemezRegime regime);

// ---------------------------------------------------------------------------
// Implication checkers. Each returns ok + the two sides of the final
// inequality; `slack` = rhs - lhs.
// ---------------------------------------------------------------------------

struct CheckOutcome {
    bool ok = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

/// Tolerance used by the checkers: 1e-6, loosened to 1e-3 when any exponent
/// sits in the quasi-norm range (0,1).
double checker_tolerance(double p, double q = 1.0);

/// Sup-norm Remez control descends to L_p:
/// ratio at (b/2, p) <= 2^{1/p} * ratio at (b, infinity).
CheckOutcome check_remez_sup_implies_lp(const GridFunction& g, double b, double p);

/// L_p Remez control descends to L_q, q < p:
/// ratio at (b, q) <= ratio(b, p)^{p/q}.
CheckOutcome check_remez_lp_implies_lq(const GridFunction& g, double b, double p,
                                       double q);

/// Sup-norm Remez ratio bounds the Nikolskii quotient:
/// ||g||_p <= R^{q beta} b^{-beta} ||g||_q with R the (b, infinity) ratio.
CheckOutcome check_sup_remez_implies_nikolskii(const GridFunction& g, double b,
                                               double p, double q);

/// Finite-p variant: ||g||_p <= R b^{-beta} ||g||_q with R the (b, p) ratio.
CheckOutcome check_lp_remez_implies_nikolskii(const GridFunction& g, double b,
                                              double p, double q);

struct NikolskiiParams {
    double p = 2.0;
    double q = 1.0;
    double C = 1.0;
    double m = 1.0;
};

struct RemezBudget {
    double budget = 0.0;
    double factor = 1.0;
};

/// Budget b = ((2^{max(1,1/q)} C)^{1/beta} m)^{-1}: any function satisfying
/// ||f||_p <= C m^beta ||f||_q then satisfies the L_q Remez inequality with
/// the returned factor 2^{max(1,1/q)}.
RemezBudget nikolskii_to_remez_budget(const NikolskiiParams& params);

/// Full pipeline check for one function: compute its own Nikolskii constant
/// at scale m, derive the budget, and verify the L_q Remez inequality.
CheckOutcome check_nikolskii_implies_remez(const GridFunction& g, double p,
                                           double q, double m);

/// Measure budget guaranteeing factor 2^{max(1,1/p)} for polynomials with
/// the given spectrum: 1/(C |supp|) for 0 < p <= 2 (any d) and
/// 1/(C |supp|^{p/2}) for d = 1, 2 < p < infinity.
double sparse_support_remez_budget(const IndexSet& support, double p, double C = 4.0);

/// Paired empirical checker for the sparse-support budget.
CheckOutcome check_sparse_support_remez(const GridFunction& g,
                                        const IndexSet& support, double p,
                                        double C = 4.0);

struct SupRemezReport {
    double budget = 0.0;
    double ratio = 0.0;
    double bound = 0.0;
    bool ok = false;
};

/// The reproducing-kernel argument with measured constants: for g sampled
/// from a polynomial reproduced by a kernel with the given norms, the sup
/// ratio at budget 1/(2 ||K||_inf) is at most 2 ||K||_1.
SupRemezReport verify_kernel_sup_remez(const RemezReport& ratio_report,
                                       const KernelNorms& norms);

/// Convenience: streamed ratio of f at b = 1/(2 norms.linf), then the check.
SupRemezReport verify_kernel_sup_remez_stream(const TrigPoly& f, const Grid& grid,
                                              const KernelNorms& norms);

struct LowerSearchResult {
    TrigPoly best;
    double ratio = 1.0;
};

/// Coordinate-ascent / random-restart maximization of the sup-norm Remez
/// ratio over unit-coefficient polynomials on Gamma(N). Best-effort lower
/// bound; deterministic under seed.
LowerSearchResult remez_lower_search(std::int64_t N, int dim, double b,
                                     int iterations, std::uint64_t seed,
                                     double oversample = 4.0);

}  // namespace hcr
