// SPDX-License-Identifier: MIT

#include "hcr/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcr {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw config_error(msg);
}

// Half-octave breakpoint ladder 1, 2, 3, 4, 6, 8, 12, 16, ...
// Consecutive gaps are powers of two, so the tent weights below are exact
// dyadic rationals and partition-of-unity sums are exact in floating point.
std::int64_t breakpoint(int j) {
    if (j <= 0) return 1;
    if (j % 2 == 1) return std::int64_t(1) << ((j + 1) / 2);
    return 3 * (std::int64_t(1) << (j / 2 - 1));
}

// Tent multiplier on the breakpoint ladder: 1 at u_j, 0 at u_{j-1} and
// u_{j+1}. For j = 0 the plateau covers bar(k) = 1, i.e. k in {0, +-1}.
double tent_weight(int j, std::int64_t t) {
    const std::int64_t mid = breakpoint(j);
    const std::int64_t hi = breakpoint(j + 1);
    if (j == 0) {
        if (t >= hi) return 0.0;
        return double(hi - t) / double(hi - 1);
    }
    const std::int64_t lo = breakpoint(j - 1);
    if (t <= lo || t >= hi) return 0.0;
    if (t <= mid) return double(t - lo) / double(mid - lo);
    return double(hi - t) / double(hi - mid);
}

TrigPoly tent_block_1d(int j) {
    const std::int64_t hi = breakpoint(j + 1);
    TrigPolyBuilder b(1);
    if (j == 0) b.add(freq1(0), 1.0);
    const std::int64_t lo = j == 0 ? 1 : breakpoint(j - 1) + 1;
    for (std::int64_t t = lo; t < hi; ++t) {
        const double w = tent_weight(j, t);
        if (w == 0.0) continue;
        b.add(freq1(std::int32_t(t)), w);
        b.add(freq1(std::int32_t(-t)), w);
    }
    return b.build();
}

void verify_hyperbolic_spectrum(const TrigPoly& v, std::int64_t N, int dim) {
    const IndexSet gamma = hyperbolic_cross(N, dim);
    for (const Freq& k : gamma.members())
        if (std::abs(v.coeff(k) - cplx(1.0, 0.0)) > 1e-12)
            throw construction_error("hyperbolic_vp_kernel: spectrum not flat on "
                                     "Gamma(N) at N=" + std::to_string(N));
    const std::int64_t outer = (std::int64_t(1) << dim) * N;
    for (const auto& t : v.terms())
        if (bar_product(t.k, dim) > outer)
            throw construction_error("hyperbolic_vp_kernel: support escapes "
                                     "Gamma(2^d N) at N=" + std::to_string(N));
}

}  // namespace

TrigPoly dirichlet(int m) {
    require(m >= 0, "dirichlet requires m >= 0");
    TrigPolyBuilder b(1);
    for (int k = -m; k <= m; ++k) b.add(freq1(k), 1.0);
    return b.build();
}

TrigPoly vallee_poussin_1d(int m) {
    require(m >= 1, "vallee_poussin_1d requires m >= 1");
    TrigPolyBuilder b(1);
    for (int k = -2 * m + 1; k <= 2 * m - 1; ++k) {
        const int a = std::abs(k);
        b.add(freq1(k), a <= m ? 1.0 : double(2 * m - a) / double(m));
    }
    return b.build();
}

TrigPoly block_kernel_1d(int s) {
    require(s >= 0, "block_kernel requires s >= 0");
    require(s <= kMaxLayerIndex + 2, "block_kernel: scale exceeds supported cap");
    if (s == 0) return TrigPoly::constant(1, 1.0);
    if (s == 1) return vallee_poussin_1d(1) - TrigPoly::constant(1, 1.0);
    return vallee_poussin_1d(1 << (s - 1)) - vallee_poussin_1d(1 << (s - 2));
}

TrigPoly block_kernel(const std::vector<int>& s) {
    require(!s.empty() && int(s.size()) <= kMaxDim,
            "block_kernel: 1 to 3 components");
    TrigPoly out = block_kernel_1d(s[0]);
    for (std::size_t j = 1; j < s.size(); ++j) out = tensor(out, block_kernel_1d(s[j]));
    return out;
}

Rank2Poly hyperbolic_vp_rank2(std::int64_t N) {
    require(N >= 1, "hyperbolic_vp_kernel requires N >= 1");
    require(N <= kMaxHyperbolicN, "hyperbolic_vp_kernel: N exceeds supported cap");
    Rank2Poly out;
    int top = 0;
    while (breakpoint(top) < N) ++top;
    for (int j = 0; j <= top; ++j) {
        // The x2 factor must be flat wherever the tent can pair with it
        // inside Gamma(N): bar(k1) > u_{j-1} forces bar(k2) <= N/(u_{j-1}+1).
        const std::int64_t lo = j == 0 ? 0 : breakpoint(j - 1);
        const std::int64_t flat = std::max<std::int64_t>(1, N / (lo + 1));
        out.terms.push_back({1.0, tent_block_1d(j), vallee_poussin_1d(int(flat))});
    }
    return out;
}

TrigPoly hyperbolic_vp_kernel(std::int64_t N, int dim) {
    require(dim >= 1 && dim <= kMaxDim, "hyperbolic_vp_kernel: d must be 1..3");
    require(N >= 1, "hyperbolic_vp_kernel requires N >= 1");
    require(N <= kMaxHyperbolicN, "hyperbolic_vp_kernel: N exceeds supported cap");
    TrigPoly v;
    if (dim == 1) {
        v = vallee_poussin_1d(int(N));
    } else if (dim == 2) {
        v = hyperbolic_vp_rank2(N).to_trigpoly();
    } else {
        // d = 3: same ladder, with the d = 2 kernel as the inner factor.
        TrigPolyBuilder b(3);
        int top = 0;
        while (breakpoint(top) < N) ++top;
        for (int j = 0; j <= top; ++j) {
            const std::int64_t lo = j == 0 ? 0 : breakpoint(j - 1);
            const std::int64_t flat = std::max<std::int64_t>(1, N / (lo + 1));
            b.add(tensor(tent_block_1d(j), hyperbolic_vp_kernel(flat, 2)));
        }
        v = b.build();
    }
    verify_hyperbolic_spectrum(v, N, dim);
    return v;
}

Rank2Poly layer_vp_rank2(int n) {
    require(n >= 1, "layer_vp_kernel requires n >= 1");
    require(n <= kMaxLayerIndex, "layer_vp_kernel: n exceeds supported cap");
    Rank2Poly out;
    for (int s1 = 0; s1 <= n + 2; ++s1) {
        TrigPoly w(1);
        for (int level = std::max(n, s1); level <= n + 2; ++level)
            w += block_kernel_1d(level - s1);
        if (w.empty()) continue;
        out.terms.push_back({1.0, block_kernel_1d(s1), std::move(w)});
    }
    return out;
}

TrigPoly layer_vp_kernel(int n) { return layer_vp_rank2(n).to_trigpoly(); }

TrigPoly jackson_kernel(int n, int r) {
    require(n >= 1, "jackson_kernel requires n >= 1");
    require(r >= 1, "jackson_kernel requires r >= 1");
    TrigPolyBuilder base(1);
    for (int k = -(n - 1); k <= n - 1; ++k)
        base.add(freq1(k), (1.0 - double(std::abs(k)) / double(n)) / double(n));
    TrigPoly factor = base.build();
    TrigPoly out = factor;
    for (int i = 1; i < r; ++i) out = multiply(out, factor);
    return out;
}

KernelSpec parse_kernel_spec(const std::string& text) {
    KernelSpec spec;
    const auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (spec.kind.empty()) throw config_error("kernel spec: empty kind");
    if (colon == std::string::npos) return spec;
    std::istringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw config_error("kernel spec: expected key=value, got '" + item + "'");
        spec.args[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return spec;
}

namespace {

std::int64_t arg_int(const KernelSpec& spec, const std::string& key) {
    auto it = spec.args.find(key);
    if (it == spec.args.end())
        throw config_error("kernel spec '" + spec.kind + "' needs " + key + "=...");
    return std::stoll(it->second);
}

}  // namespace

TrigPoly build_kernel(const KernelSpec& spec) {
    if (spec.kind == "dirichlet") return dirichlet(int(arg_int(spec, "m")));
    if (spec.kind == "vp1d") return vallee_poussin_1d(int(arg_int(spec, "m")));
    if (spec.kind == "vp") {
        const int d = spec.args.count("d") ? int(arg_int(spec, "d")) : 2;
        return hyperbolic_vp_kernel(arg_int(spec, "N"), d);
    }
    if (spec.kind == "layer") return layer_vp_kernel(int(arg_int(spec, "n")));
    if (spec.kind == "jackson")
        return jackson_kernel(int(arg_int(spec, "n")), int(arg_int(spec, "r")));
    if (spec.kind == "block") {
        auto it = spec.args.find("s");
        if (it == spec.args.end()) throw config_error("block kernel needs s=..x..");
        std::vector<int> s;
        std::istringstream ss(it->second);
        std::string part;
        while (std::getline(ss, part, 'x')) s.push_back(std::stoi(part));
        return block_kernel(s);
    }
    throw config_error("unknown kernel kind '" + spec.kind + "'");
}

}  // namespace hcr
