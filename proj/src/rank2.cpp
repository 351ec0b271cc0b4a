// SPDX-License-Identifier: MIT

#include "hcr/rank2.hpp"

#include <algorithm>
#include <cmath>

namespace hcr {

std::int64_t Rank2Poly::max_degree(int axis) const {
    std::int64_t d = 0;
    for (const RankTerm& t : terms)
        d = std::max(d, (axis == 0 ? t.u : t.v).max_degree(0));
    return d;
}

cplx Rank2Poly::coeff(const Freq& k) const {
    cplx acc{};
    for (const RankTerm& t : terms)
        acc += t.coef * t.u.coeff(freq1(k[0])) * t.v.coeff(freq1(k[1]));
    return acc;
}

TrigPoly Rank2Poly::to_trigpoly() const {
    std::size_t bound = 0;
    for (const RankTerm& t : terms) bound += t.u.size() * t.v.size();
    if (bound > runtime_config().support_cap)
        throw resource_limit_error("rank expansion would exceed the support cap");
    TrigPolyBuilder b(2);
    for (const RankTerm& t : terms)
        for (const auto& ut : t.u.terms())
            for (const auto& vt : t.v.terms())
                b.add(freq2(ut.k[0], vt.k[0]), t.coef * ut.c * vt.c);
    return b.build();
}

Grid Rank2Poly::eval_grid(double oversample) const {
    std::int64_t g0 = 8, g1 = 8;
    const double want0 = oversample * double(2 * max_degree(0) + 1);
    const double want1 = oversample * double(2 * max_degree(1) + 1);
    while (g0 < std::int64_t(std::ceil(want0))) g0 <<= 1;
    while (g1 < std::int64_t(std::ceil(want1))) g1 <<= 1;
    return grid2(g0, g1);
}

namespace {

// Real samples of a real-even univariate factor on [0 .. G] nodes.
std::vector<double> half_axis_samples(const TrigPoly& u, std::int64_t g,
                                      std::int64_t half) {
    const GridFunction gf = evaluate_on_grid(u, grid1(g));
    std::vector<double> out(static_cast<std::size_t>(half + 1));
    for (std::int64_t t = 0; t <= half; ++t) out[std::size_t(t)] = gf.values[std::size_t(t)].real();
    return out;
}

}  // namespace

Reductions rank2_reduce(const Rank2Poly& f, const Grid& grid, const ReductionSpec& spec) {
    if (grid.dim != 2) throw config_error("rank2_reduce: d = 2 only");
    const std::int64_t g0 = grid.extent(0);
    const std::int64_t g1 = grid.extent(1);
    if (g0 % 2 != 0 || g1 % 2 != 0)
        throw config_error("rank2_reduce: grid extents must be even");
    if (2 * f.max_degree(0) + 1 > g0 || 2 * f.max_degree(1) + 1 > g1)
        throw config_error("rank2_reduce: grid below the Nyquist count");
    for (const RankTerm& t : f.terms)
        if (!t.u.real_even() || !t.v.real_even())
            throw construction_error("rank2_reduce: factors must be real and even");

    const std::int64_t h0 = g0 / 2;
    const std::int64_t h1 = g1 / 2;
    const std::size_t rank = f.terms.size();

    std::vector<std::vector<double>> U(rank), V(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        U[r] = half_axis_samples(f.terms[r].u, g0, h0);
        V[r] = half_axis_samples(f.terms[r].v, g1, h1);
    }

    // Cell multiplicities of the quadrant fold: boundary nodes (t = 0 or
    // t = G/2) are their own mirror image.
    std::vector<std::uint32_t> w1(static_cast<std::size_t>(h1 + 1), 2);
    w1.front() = 1;
    w1.back() = 1;
    std::vector<std::uint32_t> w1_doubled(w1);
    for (auto& w : w1_doubled) w *= 2;

    struct SliceAcc {
        std::vector<double> power;
        double max_abs = -1.0;
        std::int64_t arg = 0;
    };
    std::vector<SliceAcc> slices(std::size_t(h0 + 1));
    std::vector<detail::TopPool> pools(worker_threads(), detail::TopPool(spec.top_cells));

    detail::parallel_chunks(h0 + 1, [&](std::int64_t lo, std::int64_t hi, unsigned tid) {
        std::vector<double> val(static_cast<std::size_t>(h1 + 1));
        std::vector<double> coefs(rank);
        for (std::int64_t t0 = lo; t0 < hi; ++t0) {
            for (std::size_t r = 0; r < rank; ++r)
                coefs[r] = f.terms[r].coef * U[r][std::size_t(t0)];
            std::fill(val.begin(), val.end(), 0.0);
            for (std::size_t r = 0; r < rank; ++r) {
                const double a = coefs[r];
                if (a == 0.0) continue;
                const double* vr = V[r].data();
                double* out = val.data();
                for (std::int64_t i = 0; i <= h1; ++i) out[i] += a * vr[i];
            }
            const std::uint32_t* weights =
                (t0 == 0 || t0 == h0) ? w1.data() : w1_doubled.data();

            SliceAcc acc;
            acc.power.assign(spec.p_list.size(), 0.0);
            for (std::int64_t i = 0; i <= h1; ++i) {
                const double a = std::abs(val[std::size_t(i)]);
                const double w = double(weights[std::size_t(i)]);
                for (std::size_t pi = 0; pi < spec.p_list.size(); ++pi) {
                    const double p = spec.p_list[pi];
                    double ap;
                    if (p == 1.0)
                        ap = a;
                    else if (p == 2.0)
                        ap = a * a;
                    else
                        ap = std::pow(a, p);
                    acc.power[pi] += w * ap;
                }
                if (a > acc.max_abs) {
                    acc.max_abs = a;
                    acc.arg = i;
                }
                pools[tid].offer(a, std::uint64_t(t0 * g1 + i), weights[std::size_t(i)]);
            }
            slices[std::size_t(t0)] = std::move(acc);
        }
    });

    Reductions red;
    red.total_cells = std::uint64_t(g0) * std::uint64_t(g1);
    red.p_list = spec.p_list;
    red.power_sums.assign(spec.p_list.size(), 0.0);
    red.max_abs = -1.0;
    for (std::int64_t t0 = 0; t0 <= h0; ++t0) {
        const SliceAcc& acc = slices[std::size_t(t0)];
        for (std::size_t pi = 0; pi < spec.p_list.size(); ++pi)
            red.power_sums[pi] += acc.power[pi];
        if (acc.max_abs > red.max_abs) {
            red.max_abs = acc.max_abs;
            red.argmax = std::uint64_t(t0 * g1 + acc.arg);
        }
    }
    if (red.max_abs < 0.0) red.max_abs = 0.0;
    std::vector<TopCell> pool;
    for (const auto& p : pools) p.merge_into(pool);
    red.top = detail::TopPool::finalize(std::move(pool), spec.top_cells);
    return red;
}

}  // namespace hcr
