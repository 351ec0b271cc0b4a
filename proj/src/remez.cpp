// SPDX-License-Identifier: MIT

#include "hcr/remez.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hcr/indexsets.hpp"

namespace hcr {

namespace {

std::string extremal_reference(const GridSet& B) {
    if (B.grid().total() <= 1 << 16) return B.to_rle();
    std::ostringstream os;
    os << "top-cells:" << B.count() << "/" << B.grid().total();
    return os.str();
}

RemezReport make_report(double total, double outside, std::uint64_t budget_cells,
                        std::uint64_t total_cells, std::string ref) {
    RemezReport r;
    r.norm_total = total;
    r.norm_outside = outside;
    r.budget_cells = budget_cells;
    r.total_cells = total_cells;
    r.effective_budget = double(budget_cells) / double(total_cells);
    r.extremal_ref = std::move(ref);
    if (outside == 0.0) {
        r.infinite = true;
        r.ratio = std::numeric_limits<double>::infinity();
    } else {
        r.ratio = total / outside;
    }
    return r;
}

void check_budget_exponent(double b, double p) {
    if (!(b >= 0.0) || b >= 1.0) throw config_error("remez budget must be in [0,1)");
    if (!(p > 0.0)) throw config_error("exponent must be positive");
}

}  // namespace

RemezReport remez_ratio(const GridFunction& g, double b, double p) {
    check_budget_exponent(b, p);
    if (g.values.empty()) throw config_error("remez_ratio: empty grid function");
    const GridSet extremal = top_level_set(g, b);
    const double total = lp_norm(g, p);
    if (total == 0.0) throw config_error("remez_ratio: zero function");
    const double outside = lp_norm_excluding(g, p, extremal);
    return make_report(total, outside, std::uint64_t(extremal.count()),
                       std::uint64_t(g.grid.total()), extremal_reference(extremal));
}

RemezReport remez_ratio_reduced(const Reductions& red, double b, double p) {
    check_budget_exponent(b, p);
    const std::uint64_t K =
        std::uint64_t(std::floor(b * double(red.total_cells)));
    const double total = red.norm(p);
    if (total == 0.0) throw config_error("remez_ratio: zero function");
    const double outside = red.norm_outside_top(p, K);
    std::ostringstream ref;
    ref << "top-cells:" << K << "/" << red.total_cells;
    return make_report(total, outside, K, red.total_cells, ref.str());
}

RemezReport remez_ratio_stream(const TrigPoly& f, const Grid& grid, double b,
                               double p) {
    check_budget_exponent(b, p);
    ReductionSpec spec;
    if (!std::isinf(p)) spec.p_list.push_back(p);
    spec.top_cells = std::uint64_t(std::floor(b * double(grid.total())));
    const Reductions red = evaluate_reduced(f, grid, spec);
    return remez_ratio_reduced(red, b, p);
}

double remez_bound_reference(const std::vector<std::int64_t>& degrees,
                             double B_measure, RemezRegime regime) {
    if (degrees.empty()) throw config_error("remez_bound_reference: empty degrees");
    for (auto n : degrees)
        if (n < 1) throw config_error("remez_bound_reference: degrees must be >= 1");
    switch (regime) {
        case RemezRegime::small_measure: {
            if (degrees.size() != 1)
                throw config_error("small-measure constant is univariate");
            if (!(B_measure >= 0.0 && B_measure < kPi / 2))
                throw config_error("small-measure regime needs |B| < pi/2");
            return std::exp(2.0 * double(degrees[0]) * B_measure);
        }
        case RemezRegime::large_measure: {
            if (degrees.size() != 1)
                throw config_error("large-measure constant is univariate");
            if (!(B_measure >= kPi / 2 && B_measure < kTwoPi))
                throw config_error("large-measure regime needs pi/2 <= |B| < 2pi");
            return std::pow(17.0 / (kTwoPi - B_measure), 2.0 * double(degrees[0]));
        }
        case RemezRegime::multivariate_box: {
            const int d = int(degrees.size());
            double prod = 1.0;
            std::int64_t min_n = degrees[0];
            for (auto n : degrees) {
                prod *= double(n);
                min_n = std::min(min_n, n);
            }
            const double admissible =
                std::pow(kPi / 2, d) * std::pow(double(min_n), d) / prod;
            if (!(B_measure >= 0.0 && B_measure < admissible))
                throw config_error("box-polynomial regime: |B| outside the "
                                   "admissibility bound");
            return std::exp(2.0 * d * std::pow(B_measure * prod, 1.0 / d));
        }
    }
    throw config_error("unknown regime");
}

double checker_tolerance(double p, double q) {
    const double lo = std::min(p, q);
    return (lo >= 1.0) ? 1e-6 : 1e-3;
}

namespace {

CheckOutcome outcome(double lhs, double rhs, double eps) {
    CheckOutcome c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.ok = lhs <= rhs * (1.0 + eps);
    return c;
}

}  // namespace

CheckOutcome check_remez_sup_implies_lp(const GridFunction& g, double b, double p) {
    if (std::isinf(p)) throw config_error("check needs finite p");
    const double r_inf = remez_ratio(g, b, INFINITY).ratio;
    const double r_p = remez_ratio(g, b / 2.0, p).ratio;
    return outcome(r_p, std::pow(2.0, 1.0 / p) * r_inf, checker_tolerance(p));
}

CheckOutcome check_remez_lp_implies_lq(const GridFunction& g, double b, double p,
                                       double q) {
    if (!(0 < q && q < p) || std::isinf(p))
        throw config_error("check needs 0 < q < p < infinity");
    const double r_p = remez_ratio(g, b, p).ratio;
    const double r_q = remez_ratio(g, b, q).ratio;
    return outcome(r_q, std::pow(r_p, p / q), checker_tolerance(p, q));
}

CheckOutcome check_sup_remez_implies_nikolskii(const GridFunction& g, double b,
                                               double p, double q) {
    if (!(0 < q && q < p)) throw config_error("check needs 0 < q < p <= infinity");
    const RemezReport rep = remez_ratio(g, b, INFINITY);
    if (rep.budget_cells < 1)
        throw config_error("budget resolves to zero cells on this grid");
    const double beta = 1.0 / q - (std::isinf(p) ? 0.0 : 1.0 / p);
    const double rhs = std::pow(rep.ratio, q * beta) *
                       std::pow(rep.effective_budget, -beta) * lp_norm(g, q);
    return outcome(lp_norm(g, p), rhs, checker_tolerance(std::isinf(p) ? 1.0 : p, q));
}

CheckOutcome check_lp_remez_implies_nikolskii(const GridFunction& g, double b,
                                              double p, double q) {
    if (!(0 < q && q < p) || std::isinf(p))
        throw config_error("check needs 0 < q < p < infinity");
    const RemezReport rep = remez_ratio(g, b, p);
    if (rep.budget_cells < 1)
        throw config_error("budget resolves to zero cells on this grid");
    const double beta = 1.0 / q - 1.0 / p;
    const double rhs =
        rep.ratio * std::pow(rep.effective_budget, -beta) * lp_norm(g, q);
    return outcome(lp_norm(g, p), rhs, checker_tolerance(p, q));
}

RemezBudget nikolskii_to_remez_budget(const NikolskiiParams& params) {
    if (!(params.q > 0) || !(params.p > params.q))
        throw config_error("nikolskii_to_remez_budget needs 0 < q < p");
    if (!(params.C >= 1.0)) throw config_error("Nikolskii constant must be >= 1");
    if (!(params.m >= 1.0)) throw config_error("scale m must be >= 1");
    const double beta =
        1.0 / params.q - (std::isinf(params.p) ? 0.0 : 1.0 / params.p);
    const double factor = std::pow(2.0, std::max(1.0, 1.0 / params.q));
    RemezBudget out;
    out.factor = factor;
    out.budget = 1.0 / (std::pow(factor * params.C, 1.0 / beta) * params.m);
    return out;
}

CheckOutcome check_nikolskii_implies_remez(const GridFunction& g, double p,
                                           double q, double m) {
    if (!(0 < q && q < p)) throw config_error("check needs 0 < q < p <= infinity");
    const double beta = 1.0 / q - (std::isinf(p) ? 0.0 : 1.0 / p);
    const double nq = lp_norm(g, q);
    if (nq == 0.0) throw config_error("zero function");
    // The tightest constant this g satisfies at scale m, floored so the
    // budget formula's precondition C >= 1 holds.
    const double C = std::max(1.0, lp_norm(g, p) / (std::pow(m, beta) * nq));
    const RemezBudget rb = nikolskii_to_remez_budget({p, q, C, m});
    const double ratio = remez_ratio(g, rb.budget, q).ratio;
    return outcome(ratio, rb.factor, checker_tolerance(std::isinf(p) ? 1.0 : p, q));
}

double sparse_support_remez_budget(const IndexSet& support, double p, double C) {
    if (support.size() == 0) throw config_error("empty spectrum");
    if (!(p > 0)) throw config_error("exponent must be positive");
    if (C < 1.0) throw config_error("constant must be >= 1");
    const double n = double(support.size());
    if (p <= 2.0) return 1.0 / (C * n);
    if (support.dim() == 1) return 1.0 / (C * std::pow(n, p / 2.0));
    throw config_error("sparse-support budget for p > 2 needs convex-hull lattice "
                       "counts; only d = 1 is supported");
}

CheckOutcome check_sparse_support_remez(const GridFunction& g,
                                        const IndexSet& support, double p,
                                        double C) {
    const double b = sparse_support_remez_budget(support, p, C);
    const double ratio = remez_ratio(g, b, p).ratio;
    const double factor = std::pow(2.0, std::max(1.0, 1.0 / p));
    return outcome(ratio, factor, checker_tolerance(p));
}

SupRemezReport verify_kernel_sup_remez(const RemezReport& ratio_report,
                                       const KernelNorms& norms) {
    SupRemezReport rep;
    rep.budget = 1.0 / (2.0 * norms.linf);
    rep.ratio = ratio_report.ratio;
    rep.bound = 2.0 * norms.l1;
    rep.ok = !ratio_report.infinite && rep.ratio <= rep.bound * (1.0 + 1e-9);
    return rep;
}

SupRemezReport verify_kernel_sup_remez_stream(const TrigPoly& f, const Grid& grid,
                                              const KernelNorms& norms) {
    const double b = 1.0 / (2.0 * norms.linf);
    return verify_kernel_sup_remez(remez_ratio_stream(f, grid, b, INFINITY), norms);
}

LowerSearchResult remez_lower_search(std::int64_t N, int dim, double b,
                                     int iterations, std::uint64_t seed,
                                     double oversample) {
    if (iterations < 1) throw config_error("remez_lower_search needs iterations >= 1");
    const IndexSet gamma = hyperbolic_cross(N, dim);
    Rng rng(seed);

    auto draw = [&](Rng& r) {
        TrigPolyBuilder bld(dim);
        for (const Freq& k : gamma.members()) bld.add(k, r.complex_gaussian());
        return bld.build();
    };

    auto score = [&](const TrigPoly& f) {
        const GridFunction g = evaluate_on_grid(f, grid_for(f, oversample));
        return remez_ratio(g, b, INFINITY).ratio;
    };

    LowerSearchResult best;
    best.best = draw(rng);
    best.ratio = score(best.best);

    const auto& keys = gamma.members();
    TrigPoly current = best.best;
    double current_ratio = best.ratio;
    for (int it = 0; it < iterations; ++it) {
        if (it > 0 && it % 64 == 0) {  // random restart
            TrigPoly candidate = draw(rng);
            const double r = score(candidate);
            if (r > current_ratio) {
                current = std::move(candidate);
                current_ratio = r;
            }
        }
        const Freq& k = keys[rng.below(keys.size())];
        TrigPolyBuilder bld(dim);
        bld.add(current);
        bld.add(k, 0.5 * rng.complex_gaussian());
        TrigPoly candidate = bld.build();
        if (candidate.empty()) continue;
        const double r = score(candidate);
        if (r > current_ratio) {
            current = std::move(candidate);
            current_ratio = r;
        }
        if (current_ratio > best.ratio) {
            best.best = current;
            best.ratio = current_ratio;
        }
    }
    return best;
}

}  // namespace hcr
