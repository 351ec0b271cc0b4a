// SPDX-License-Identifier: MIT

#include "hcr/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcr {

namespace {

double pow_p(double a, double p) {
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    if (p == 4.0) {
        const double s = a * a;
        return s * s;
    }
    return std::pow(a, p);
}

void check_nonempty(const GridFunction& g) {
    if (g.values.empty()) throw config_error("empty grid function");
}

// Indices of the K cells of largest |g|, tie-broken by flat order.
// nth_element under the total order (abs desc, index asc) is exact.
std::vector<std::uint32_t> select_top_cells(const GridFunction& g, std::int64_t K) {
    std::vector<std::uint32_t> idx(g.values.size());
    std::iota(idx.begin(), idx.end(), 0u);
    if (K <= 0) return {};
    auto order = [&](std::uint32_t a, std::uint32_t b) {
        const double va = std::abs(g.values[a]);
        const double vb = std::abs(g.values[b]);
        if (va != vb) return va > vb;
        return a < b;
    };
    if (std::size_t(K) < idx.size())
        std::nth_element(idx.begin(), idx.begin() + K, idx.end(), order);
    idx.resize(std::size_t(std::min<std::int64_t>(K, std::int64_t(idx.size()))));
    return idx;
}

}  // namespace

double lp_norm(const GridFunction& g, double p) {
    check_nonempty(g);
    if (!(p > 0.0)) throw config_error("lp_norm requires p > 0");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : g.values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (const auto& v : g.values) s += pow_p(std::abs(v), p);
    return std::pow(s / double(g.values.size()), 1.0 / p);
}

double lp_norm_excluding(const GridFunction& g, double p, const GridSet& B) {
    check_nonempty(g);
    if (!(p > 0.0)) throw config_error("lp_norm requires p > 0");
    if (B.grid() != g.grid) throw config_error("lp_norm_excluding: grid mismatch");
    if (B.count() == std::int64_t(g.values.size()))
        throw config_error("lp_norm_excluding: B covers every cell");
    const auto& mask = B.mask();
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < g.values.size(); ++i)
            if (!mask[i]) m = std::max(m, std::abs(g.values[i]));
        return m;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        if (!mask[i]) s += pow_p(std::abs(g.values[i]), p);
    return std::pow(s / double(g.values.size()), 1.0 / p);
}

GridSet top_level_set(const GridFunction& g, double b) {
    check_nonempty(g);
    if (b < 0.0 || b > 1.0) throw config_error("top_level_set: budget must be in [0,1]");
    const std::int64_t K = std::int64_t(std::floor(b * double(g.values.size())));
    std::vector<std::uint8_t> mask(g.values.size(), 0);
    for (std::uint32_t i : select_top_cells(g, K)) mask[i] = 1;
    return GridSet(g.grid, std::move(mask));
}

double quantile_abs(const GridFunction& g, double q) {
    check_nonempty(g);
    if (q < 0.0 || q > 1.0) throw config_error("quantile_abs: q must be in [0,1]");
    const std::int64_t M = std::int64_t(g.values.size());
    std::int64_t t = std::int64_t(std::floor((1.0 - q) * double(M)));
    if (t >= M) t = M - 1;
    std::vector<double> abs_vals(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i) abs_vals[i] = std::abs(g.values[i]);
    std::nth_element(abs_vals.begin(), abs_vals.begin() + t, abs_vals.end(),
                     std::greater<double>());
    return abs_vals[std::size_t(t)];
}

}  // namespace hcr
