// SPDX-License-Identifier: MIT

#include "hcr/indexsets.hpp"

#include <algorithm>
#include <sstream>

namespace hcr {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw config_error("dimension must be in [1," + std::to_string(kMaxDim) +
                           "], got " + std::to_string(dim));
}

// Half-open dyadic shell for one coordinate: values v with
// [2^{s-1}] <= |v| < 2^s, as a sorted list.
std::vector<std::int32_t> shell_values(int s) {
    if (s == 0) return {0};
    const std::int64_t hi = std::int64_t(1) << s;        // exclusive
    const std::int64_t lo = std::int64_t(1) << (s - 1);  // [2^{s-1}], s>=1
    std::vector<std::int32_t> vals;
    vals.reserve(std::size_t(2 * (hi - lo)));
    for (std::int64_t v = hi - 1; v >= lo; --v) vals.push_back(std::int32_t(-v));
    for (std::int64_t v = lo; v < hi; ++v) vals.push_back(std::int32_t(v));
    return vals;
}

// Widened shell: [2^{s-2}] <= |v| < 2^s.
std::vector<std::int32_t> wide_shell_values(int s) {
    if (s == 0) return {0};
    const std::int64_t hi = std::int64_t(1) << s;
    const std::int64_t lo = s >= 2 ? (std::int64_t(1) << (s - 2)) : 0;
    std::vector<std::int32_t> vals;
    for (std::int64_t v = hi - 1; v >= std::max<std::int64_t>(lo, 1); --v)
        vals.push_back(std::int32_t(-v));
    if (lo == 0) vals.push_back(0);
    for (std::int64_t v = std::max<std::int64_t>(lo, 1); v < hi; ++v)
        vals.push_back(std::int32_t(v));
    return vals;
}

std::vector<Freq> tensor_product(const std::vector<std::vector<std::int32_t>>& axes) {
    std::vector<Freq> out;
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.size();
    out.reserve(total);
    std::array<std::size_t, kMaxDim> idx{0, 0, 0};
    const int d = int(axes.size());
    for (std::size_t c = 0; c < total; ++c) {
        Freq f;
        for (int j = 0; j < d; ++j) f[j] = axes[std::size_t(j)][idx[std::size_t(j)]];
        out.push_back(f);
        for (int j = d - 1; j >= 0; --j) {
            if (++idx[std::size_t(j)] < axes[std::size_t(j)].size()) break;
            idx[std::size_t(j)] = 0;
        }
    }
    return out;
}

void check_scale_vector(const std::vector<int>& s) {
    if (s.empty() || int(s.size()) > kMaxDim)
        throw config_error("scale vector must have 1.." + std::to_string(kMaxDim) +
                           " components");
    for (int sj : s) {
        if (sj < 0) throw config_error("scale components must be nonnegative");
        if (sj > kMaxLayerIndex + 2)
            throw config_error("scale component exceeds supported cap");
    }
}

}  // namespace

std::int64_t bar_product(const Freq& k, int dim) {
    std::int64_t p = 1;
    for (int j = 0; j < dim; ++j) p *= bar(k[j]);
    return p;
}

int dyadic_scale(std::int32_t kj) {
    const std::int64_t a = kj < 0 ? -std::int64_t(kj) : kj;
    int s = 0;
    while ((std::int64_t(1) << s) <= a) ++s;
    return s;
}

IndexSet::IndexSet(int dim, std::vector<Freq> members, std::string label)
    : dim_(dim), members_(std::move(members)), label_(std::move(label)) {
    check_dim(dim_);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IndexSet::contains(const Freq& k) const {
    return std::binary_search(members_.begin(), members_.end(), k);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    for (const Freq& k : members_)
        if (!other.contains(k)) return false;
    return true;
}

std::string IndexSet::to_text() const {
    std::ostringstream os;
    for (const Freq& k : members_) {
        for (int j = 0; j < dim_; ++j) {
            if (j) os << ' ';
            os << k[j];
        }
        os << '\n';
    }
    return os.str();
}

IndexSet hyperbolic_cross(std::int64_t N, int dim) {
    check_dim(dim);
    if (N < 1) throw config_error("hyperbolic_cross requires N >= 1");
    if (N > kMaxHyperbolicN)
        throw config_error("hyperbolic_cross: N exceeds supported cap 2^16");

    // Recursive enumeration: the budget for the remaining axes shrinks by
    // the bar of each chosen component, so only |k_j| <= N is ever visited.
    std::vector<Freq> members;
    Freq cur;
    auto rec = [&](auto&& self, int axis, std::int64_t budget) -> void {
        if (axis == dim) {
            members.push_back(cur);
            return;
        }
        for (std::int64_t v = -budget; v <= budget; ++v) {
            const std::int64_t nb = budget / bar(std::int32_t(v));
            cur[axis] = std::int32_t(v);
            self(self, axis + 1, nb);
        }
        cur[axis] = 0;
    };
    rec(rec, 0, N);
    return IndexSet(dim, std::move(members), "Gamma(" + std::to_string(N) + ")");
}

IndexSet dyadic_block(const std::vector<int>& s) {
    check_scale_vector(s);
    std::vector<std::vector<std::int32_t>> axes;
    axes.reserve(s.size());
    for (int sj : s) axes.push_back(shell_values(sj));
    std::string label = "rho(";
    for (std::size_t i = 0; i < s.size(); ++i)
        label += (i ? "," : "") + std::to_string(s[i]);
    label += ")";
    return IndexSet(int(s.size()), tensor_product(axes), label);
}

IndexSet dyadic_block_wide(const std::vector<int>& s) {
    if (s.size() != 2) throw config_error("dyadic_block_wide is defined for d = 2");
    check_scale_vector(s);
    std::vector<std::vector<std::int32_t>> axes{wide_shell_values(s[0]),
                                                wide_shell_values(s[1])};
    return IndexSet(2, tensor_product(axes),
                    "rho'(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + ")");
}

std::vector<std::vector<int>> compositions(int n, int dim) {
    std::vector<std::vector<int>> out;
    if (dim == 1) {
        out.push_back({n});
        return out;
    }
    for (int first = 0; first <= n; ++first) {
        for (auto& rest : compositions(n - first, dim - 1)) {
            std::vector<int> s{first};
            s.insert(s.end(), rest.begin(), rest.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

IndexSet step_hyperbolic(int n, int dim) {
    check_dim(dim);
    if (n < 0) throw config_error("step_hyperbolic requires n >= 0");
    if (n > kMaxLayerIndex)
        throw config_error("step_hyperbolic: n exceeds supported cap " +
                           std::to_string(kMaxLayerIndex));
    std::vector<Freq> members;
    for (int level = 0; level <= n; ++level)
        for (const auto& s : compositions(level, dim)) {
            const auto block = dyadic_block(s);
            members.insert(members.end(), block.members().begin(),
                           block.members().end());
        }
    return IndexSet(dim, std::move(members), "Q(" + std::to_string(n) + ")");
}

IndexSet hyperbolic_layer(int n, int dim) {
    check_dim(dim);
    if (n < 1) throw config_error("hyperbolic_layer requires n >= 1");
    if (n > kMaxLayerIndex)
        throw config_error("hyperbolic_layer: n exceeds supported cap");
    std::vector<Freq> members;
    for (const auto& s : compositions(n, dim)) {
        const auto block = dyadic_block(s);
        members.insert(members.end(), block.members().begin(), block.members().end());
    }
    return IndexSet(dim, std::move(members), "dQ(" + std::to_string(n) + ")");
}

ResidueFamily layer_residue_family(int n, int a, int b) {
    if (a < 1) throw config_error("layer_residue_family requires a >= 1");
    if (b < 0 || b >= a) throw config_error("residue must satisfy 0 <= b < a");
    if (n < 0) throw config_error("layer index must be nonnegative");
    ResidueFamily fam;
    fam.n = n;
    fam.a = a;
    fam.b = b;
    for (int s1 = a; s1 <= n - a; ++s1) {
        if ((s1 - b) % a != 0) continue;
        const int s2 = n - s1;
        fam.members.push_back({s1, s2});
    }
    return fam;
}

}  // namespace hcr
