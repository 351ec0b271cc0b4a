// SPDX-License-Identifier: MIT

#include "hcr/nikolskii.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcr/rng.hpp"

namespace hcr {

double nikolskii_ratio(const GridFunction& g, double p, double q) {
    if (!(q > 0) || !(p > q)) throw config_error("nikolskii_ratio needs 0 < q < p");
    const double nq = lp_norm(g, q);
    if (nq == 0.0) throw config_error("nikolskii_ratio: zero function");
    return lp_norm(g, p) / nq;
}

double nikolskii_rate_sup(std::int64_t N, int dim, double q) {
    const double logN = std::max(1.0, std::log2(double(N)));
    const double exponent = std::max(0.0, double(dim - 1) * (1.0 - 1.0 / q));
    return std::pow(double(N), 1.0 / q) * std::pow(logN, exponent);
}

double nikolskii_rate(std::int64_t N, double p, double q) {
    return std::pow(double(N), 1.0 / q - 1.0 / p);
}

namespace {

TrigPoly random_poly(const IndexSet& support, Rng& rng) {
    TrigPolyBuilder b(support.dim());
    for (const Freq& k : support.members()) b.add(k, rng.complex_gaussian());
    return b.build();
}

double ratio_dense(const TrigPoly& f, double p, double q, double oversample) {
    const GridFunction g = evaluate_on_grid(f, grid_for(f, oversample));
    return nikolskii_ratio(g, p, q);
}

double ratio_rank(const Rank2Poly& f, double p, double q, double oversample) {
    ReductionSpec spec;
    spec.top_cells = 1;
    if (!std::isinf(p)) spec.p_list.push_back(p);
    if (!std::isinf(q)) spec.p_list.push_back(q);
    const Reductions red = rank2_reduce(f, f.eval_grid(oversample), spec);
    return red.norm(p) / red.norm(q);
}

}  // namespace

ScalingRow nikolskii_sup_estimate(std::int64_t N, int dim, double p, double q,
                                  int random_draws, std::uint64_t seed,
                                  double oversample) {
    if (!(q > 0) || !(p > q)) throw config_error("needs 0 < q < p");
    if (dim < 1 || dim > 2) throw config_error("sup estimate implemented for d <= 2");

    ScalingRow row;
    row.scale = N;
    row.seed = seed;
    row.tolerance = checker_tolerance(p == INFINITY ? 1.0 : p, q);

    double best = 0.0;
    std::string witness;
    auto consider = [&](double r, const std::string& name) {
        if (r > best) {
            best = r;
            witness = name;
        }
    };

    if (dim == 1) {
        consider(ratio_dense(vallee_poussin_1d(int(N)), p, q, oversample), "vp");
        consider(ratio_dense(dirichlet(int(N)), p, q, oversample), "dirichlet");
        consider(ratio_dense(jackson_kernel(int(N), 1), p, q, oversample), "jackson");
        const IndexSet gamma = hyperbolic_cross(N, 1);
        for (int d = 0; d < random_draws; ++d) {
            Rng rng(derive_seed(seed, std::uint64_t(d)));
            consider(ratio_dense(random_poly(gamma, rng), p, q, oversample),
                     "random");
        }
    } else {
        consider(ratio_rank(hyperbolic_vp_rank2(N), p, q, oversample), "vp");
        // Layer kernel restricted to Gamma(N).
        const int n = int(std::floor(std::log2(double(N))));
        if (n >= 1) {
            const TrigPoly restricted =
                convolve(layer_vp_kernel(n), hyperbolic_vp_kernel(N, 2));
            if (!restricted.empty())
                consider(ratio_dense(restricted, p, q, oversample), "layer");
        }
        // Hyperbolic-corner Jackson tensor products.
        for (std::int64_t n1 : {N, std::int64_t(std::sqrt(double(N))), std::int64_t(1)}) {
            const std::int64_t n2 = std::max<std::int64_t>(1, N / std::max<std::int64_t>(n1, 1));
            if (n1 < 1) continue;
            const TrigPoly jk = tensor(jackson_kernel(int(n1), 1), jackson_kernel(int(n2), 1));
            consider(ratio_dense(jk, p, q, oversample), "jackson-tensor");
        }
        const IndexSet gamma = hyperbolic_cross(N, 2);
        for (int d = 0; d < random_draws; ++d) {
            Rng rng(derive_seed(seed, std::uint64_t(d)));
            consider(ratio_dense(random_poly(gamma, rng), p, q, oversample),
                     "random");
        }
    }

    row.measured = best;
    row.witness = witness;
    row.rate = std::isinf(p) ? nikolskii_rate_sup(N, dim, q) : nikolskii_rate(N, p, q);
    row.ratio = row.measured / row.rate;
    std::ostringstream gs;
    gs << "oversample=" << oversample;
    row.grid = gs.str();
    return row;
}

CheckOutcome check_sup_quasinorm_bound(const GridFunction& g, double q, double C_d,
                                       std::int64_t N) {
    if (!(q > 0 && q < 1)) throw config_error("quasi-norm bound needs 0 < q < 1");
    if (!(C_d > 0)) throw config_error("measured constant must be positive");
    CheckOutcome c;
    c.lhs = lp_norm(g, INFINITY);
    c.rhs = std::pow(C_d * double(N), 1.0 / q) * lp_norm(g, q);
    c.slack = c.rhs - c.lhs;
    c.ok = c.lhs <= c.rhs * (1.0 + 1e-3);
    return c;
}

RatioSample jackson_lower_bound(int n, int r, double p, double q, double oversample) {
    if (!(q > 0) || !(p > q)) throw config_error("needs 0 < q < p");
    if (p < 1.0 && !(double(r) > 1.0 / (2.0 * p)))
        throw config_error("jackson_lower_bound: p < 1 requires r > 1/(2p)");
    const TrigPoly jk = jackson_kernel(n, r);
    RatioSample s;
    s.witness = "jackson(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
    s.p = p;
    s.q = q;
    s.scale = n;
    s.dim = 1;
    s.ratio = ratio_dense(jk, p, q, oversample);
    return s;
}

SlopeFit fit_log2_slope(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 2) throw config_error("slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        const double lx = std::log2(x);
        const double ly = std::log2(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = double(xy.size());
    SlopeFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double rss = 0;
    for (const auto& [x, y] : xy) {
        const double e = std::log2(y) - (fit.intercept + fit.slope * std::log2(x));
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / n);
    return fit;
}

}  // namespace hcr
