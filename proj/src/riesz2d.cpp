// SPDX-License-Identifier: MIT

#include "hcr/riesz2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hcr/kernels.hpp"
#include "hcr/measure.hpp"

namespace hcr {

namespace {

// Grid sup of a univariate kernel factor; cached per scale because the same
// A_s factors recur across residues and layers.
double factor_sup(const TrigPoly& u, double oversample) {
    const GridFunction g = evaluate_on_grid(u, grid_for(u, oversample, 64));
    double m = 0.0;
    for (const auto& v : g.values) m = std::max(m, std::abs(v));
    return m;
}

class BlockSupCache {
public:
    explicit BlockSupCache(double oversample) : oversample_(oversample) {}
    double sup(int s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        const double v = factor_sup(block_kernel_1d(s), oversample_);
        cache_.emplace(s, v);
        return v;
    }

private:
    double oversample_;
    std::map<int, double> cache_;
};

int min_scale(const TrigPoly& u) {
    int m = std::numeric_limits<int>::max();
    for (const auto& t : u.terms()) m = std::min(m, dyadic_scale(t.k[0]));
    return m;
}

}  // namespace

RieszConfig make_riesz_config(int n, int a, int b, double factor_oversample) {
    if (a < 6) throw config_error("Riesz construction requires a >= 6");
    RieszConfig cfg;
    cfg.n = n;
    cfg.a = a;
    cfg.b = b;
    cfg.family = layer_residue_family(n, a, b);
    cfg.count = int(cfg.family.members.size());
    if (cfg.count == 0)
        throw config_error("H_n(a,b) is empty (need n >= 2a for a nonempty layer)");
    BlockSupCache sups(factor_oversample);
    for (const auto& s : cfg.family.members)
        cfg.M = std::max(cfg.M, sups.sup(s[0]) * sups.sup(s[1]));
    return cfg;
}

std::vector<ProductTerm> expand_product(const std::vector<ProductFactor>& factors,
                                        cplx lambda) {
    std::vector<ProductTerm> terms;
    terms.push_back({cplx(1.0, 0.0), TrigPoly::constant(1, 1.0),
                     TrigPoly::constant(1, 1.0), 0});
    for (const auto& f : factors) {
        const std::size_t existing = terms.size();
        for (std::size_t i = 0; i < existing; ++i) {
            ProductTerm t;
            t.scalar = terms[i].scalar * lambda;
            t.u = multiply(terms[i].u, f.u);
            t.v = multiply(terms[i].v, f.v);
            t.order = terms[i].order + 1;
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

std::vector<ProductTerm> riesz_expansion(const RieszConfig& cfg) {
    std::vector<ProductFactor> factors;
    factors.reserve(std::size_t(cfg.count));
    for (const auto& s : cfg.family.members)
        factors.push_back({block_kernel_1d(s[0]), block_kernel_1d(s[1])});
    const cplx lambda = cplx(0.0, 1.0) / (cfg.M * std::sqrt(double(cfg.count)));
    return expand_product(factors, lambda);
}

TrigPoly riesz_product(const RieszConfig& cfg) {
    const auto terms = riesz_expansion(cfg);
    std::size_t bound = 0;
    for (const auto& t : terms) bound += t.u.size() * t.v.size();
    if (bound > runtime_config().support_cap)
        throw resource_limit_error("riesz_product: expansion exceeds the support cap");
    TrigPolyBuilder b(2);
    for (const auto& t : terms)
        for (const auto& ut : t.u.terms())
            for (const auto& vt : t.v.terms())
                b.add(freq2(ut.k[0], vt.k[0]), t.scalar * (ut.c * vt.c));
    return b.build();
}

ProductBound check_product_bound(const RieszConfig& cfg, double factor_oversample) {
    BlockSupCache sups(factor_oversample);
    ProductBound out;
    double prod_sq = 1.0;
    for (const auto& s : cfg.family.members) {
        const double t_abs = sups.sup(s[0]) * sups.sup(s[1]) / cfg.M;
        out.max_factor_abs = std::max(out.max_factor_abs, t_abs);
        prod_sq *= 1.0 + t_abs * t_abs / double(cfg.count);
    }
    out.bound = std::pow(1.0 + 1.0 / double(cfg.count), double(cfg.count) / 2.0);
    // |Phi(x)|^2 = prod (1 + t_s(x)^2 / N) <= prod (1 + max|t_s|^2 / N) at
    // every node; the bound holds when no factor exceeds 1.
    out.ok = out.max_factor_abs <= 1.0 + 1e-12 && std::sqrt(prod_sq) <= out.bound + 1e-12;
    return out;
}

RieszDecomposition riesz_decompose(const TrigPoly& phi, const RieszConfig& cfg) {
    if (phi.dim() != 2) throw config_error("riesz_decompose: d = 2 only");
    TrigPolyBuilder lin(2);
    lin.add(freq2(0, 0), cplx(1.0, 0.0));
    const cplx lambda = cplx(0.0, 1.0) / (cfg.M * std::sqrt(double(cfg.count)));
    for (const auto& s : cfg.family.members) {
        const TrigPoly block = block_kernel(std::vector<int>{s[0], s[1]});
        lin.add(block, lambda);
    }
    RieszDecomposition out;
    out.linear_part = lin.build();
    out.remainder = phi - out.linear_part;

    const int m = cfg.n + cfg.a - 6;
    for (const auto& t : out.remainder.terms())
        if (dyadic_scale(t.k[0]) + dyadic_scale(t.k[1]) <= m)
            throw construction_error(
                "riesz_decompose: remainder has spectrum inside Q_" +
                std::to_string(m) + " (construction bug)");
    return out;
}

bool expansion_orthogonal_to(const std::vector<ProductTerm>& terms, int m) {
    for (const auto& t : terms) {
        if (t.order < 2) continue;
        if (t.u.empty() || t.v.empty()) continue;
        if (min_scale(t.u) + min_scale(t.v) <= m) return false;
    }
    return true;
}

LayerKernelResult modified_layer_kernel(int n, double norm_oversample) {
    if (n < 12)
        throw config_error("modified_layer_kernel requires n >= 12 "
                           "(residue families with a = 6 must be nonempty)");
    if (n > kMaxLayerIndex)
        throw config_error("modified_layer_kernel: n exceeds supported cap");
    constexpr int a = 6;

    LayerKernelResult out;
    out.n = n;
    out.raw_rank = layer_vp_rank2(n);
    out.kernel_rank = out.raw_rank;

    // Correction terms: for every residue family on the three layers, the
    // imaginary part of the Riesz remainder, scaled back by M sqrt(N).
    // Subset terms of even order are real and contribute nothing; order-1
    // terms reproduce the blocks already present in dV_n.
    for (int level = n; level <= n + 2; ++level) {
        for (int b = 0; b < a; ++b) {
            if (layer_residue_family(level, a, b).members.empty()) continue;
            const RieszConfig cfg = make_riesz_config(level, a, b);
            const auto terms = riesz_expansion(cfg);
            if (!expansion_orthogonal_to(terms, level + a - 6))
                throw construction_error("modified_layer_kernel: Riesz remainder "
                                         "not orthogonal to its layer cross");
            const double scale_back = cfg.M * std::sqrt(double(cfg.count));
            for (const auto& t : terms) {
                if (t.order < 3 || t.order % 2 == 0) continue;
                const double imag_scalar = t.scalar.imag();
                if (imag_scalar == 0.0) continue;
                out.kernel_rank.terms.push_back(
                    {scale_back * imag_scalar, t.u, t.v});
                out.correction_zero = false;
            }
        }
    }

    // Reproduction on T(dQ_n): coefficient exactly 1 on the whole layer.
    const IndexSet layer = hyperbolic_layer(n, 2);
    for (const Freq& k : layer.members())
        if (std::abs(out.kernel_rank.coeff(k) - cplx(1.0, 0.0)) > 1e-12)
            throw construction_error("modified_layer_kernel: kernel does not "
                                     "reproduce the layer spectrum");

    // Correction orthogonality to T(Q_n): every added term individually.
    for (std::size_t i = out.raw_rank.terms.size(); i < out.kernel_rank.terms.size();
         ++i) {
        const RankTerm& t = out.kernel_rank.terms[i];
        if (min_scale(t.u) + min_scale(t.v) <= n)
            throw construction_error("modified_layer_kernel: correction has "
                                     "spectrum inside Q_n");
    }

    ReductionSpec spec;
    spec.p_list = {1.0};
    spec.top_cells = 1;
    const Grid grid = out.kernel_rank.eval_grid(norm_oversample);
    const Reductions kred = rank2_reduce(out.kernel_rank, grid, spec);
    out.stats.l1 = kred.norm(1.0);
    out.stats.linf = kred.max_abs;
    if (out.correction_zero) {
        out.stats.l1_raw = out.stats.l1;
        out.stats.linf_raw = out.stats.linf;
    } else {
        const Reductions rred = rank2_reduce(out.raw_rank, grid, spec);
        out.stats.l1_raw = rred.norm(1.0);
        out.stats.linf_raw = rred.max_abs;
    }
    out.stats.grid0 = grid.extent(0);
    out.stats.grid1 = grid.extent(1);

    out.kernel = out.kernel_rank.to_trigpoly();
    return out;
}

SupRemezReport verify_layer_remez(const TrigPoly& f, const LayerKernelResult& K,
                                  double oversample) {
    const KernelNorms norms{K.stats.l1, K.stats.linf};
    return verify_kernel_sup_remez_stream(f, grid_for(f, oversample), norms);
}

}  // namespace hcr
