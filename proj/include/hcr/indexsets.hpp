// SPDX-License-Identifier: MIT
//
// Frequency index sets on Z^d: the hyperbolic cross Gamma(N), dyadic blocks
// rho(s) and their widened variant rho'(s), the step hyperbolic cross Q_n and
// its layers dQ_n, and the residue families H_n(a,b) used by the d=2 Riesz
// construction.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hcr/config.hpp"

namespace hcr {

/// A frequency vector in Z^d, d <= kMaxDim. Components beyond the active
/// dimension are zero; the dimension is carried by the owning container.
struct Freq {
    std::array<std::int32_t, kMaxDim> k{0, 0, 0};

    std::int32_t operator[](int i) const { return k[std::size_t(i)]; }
    std::int32_t& operator[](int i) { return k[std::size_t(i)]; }

    friend bool operator==(const Freq&, const Freq&) = default;
    friend auto operator<=>(const Freq&, const Freq&) = default;
};

inline Freq freq1(std::int32_t k0) { return Freq{{k0, 0, 0}}; }
inline Freq freq2(std::int32_t k0, std::int32_t k1) { return Freq{{k0, k1, 0}}; }

/// max(1, |k_j|)
inline std::int64_t bar(std::int32_t kj) {
    const std::int64_t a = kj < 0 ? -std::int64_t(kj) : kj;
    return a < 1 ? 1 : a;
}

/// prod_j max(1,|k_j|)
std::int64_t bar_product(const Freq& k, int dim);

/// Dyadic scale of a single component: the unique s >= 0 with
/// [2^{s-1}] <= |k| < 2^s.
int dyadic_scale(std::int32_t kj);

/// A finite set of frequency vectors. Members are kept sorted
/// lexicographically; iteration order is therefore deterministic.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(int dim, std::vector<Freq> members, std::string label);

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const std::vector<Freq>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const Freq& k) const;
    bool subset_of(const IndexSet& other) const;

    /// One index per line, space-separated integer components.
    std::string to_text() const;

private:
    int dim_ = 1;
    std::vector<Freq> members_;
    std::string label_;
};

/// The family H_n(a,b): s on layer n with s_1, s_2 >= a and s_1 = a*l + b.
struct ResidueFamily {
    int n = 0;
    int a = 1;
    int b = 0;
    std::vector<std::array<int, 2>> members;
};

/// Gamma(N) = {k : prod max(1,|k_j|) <= N}.
IndexSet hyperbolic_cross(std::int64_t N, int dim);

/// rho(s) = {k : [2^{s_j-1}] <= |k_j| < 2^{s_j}}; rho((0,..)) = {0}.
IndexSet dyadic_block(const std::vector<int>& s);

/// rho'(s) = {m : [2^{s_i-2}] <= |m_i| < 2^{s_i}}, d = 2 only.
IndexSet dyadic_block_wide(const std::vector<int>& s);

/// Q_n = union of rho(s) over ||s||_1 <= n.
IndexSet step_hyperbolic(int n, int dim);

/// dQ_n = Q_n \ Q_{n-1} = union of rho(s) over ||s||_1 = n.
IndexSet hyperbolic_layer(int n, int dim);

ResidueFamily layer_residue_family(int n, int a, int b);

/// All s in Z_+^d with ||s||_1 = n (helper for layer enumeration).
std::vector<std::vector<int>> compositions(int n, int dim);

}  // namespace hcr
