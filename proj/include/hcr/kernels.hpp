// SPDX-License-Identifier: MIT
//
// Kernel constructions: Dirichlet and de la Vallee Poussin kernels, dyadic
// block kernels A_s, the hyperbolic-cross de la Vallee Poussin kernel V_N
// (spectrum identically 1 on Gamma(N), vanishing outside Gamma(2^d N)), the
// layer kernel reproducing T(dQ_n), and the Jackson kernel.
#pragma once

#include <map>
#include <string>

#include "hcr/rank2.hpp"
#include "hcr/trigpoly.hpp"

namespace hcr {

/// D_m: coefficients 1 on |k| <= m.
TrigPoly dirichlet(int m);

/// V_m = (1/m) sum_{l=m}^{2m-1} D_l: flat on |k| <= m, linear ramp
/// (2m-|k|)/m down to zero at |k| = 2m. ||V_m||_1 <= 3 classically.
TrigPoly vallee_poussin_1d(int m);

/// Univariate dyadic block: A_0 = 1, A_1 = V_1 - 1,
/// A_s = V_{2^{s-1}} - V_{2^{s-2}} for s >= 2.
TrigPoly block_kernel_1d(int s);

/// Tensor product block A_s(x) = prod_j A_{s_j}(x_j).
TrigPoly block_kernel(const std::vector<int>& s);

/// Hyperbolic-cross de la Vallee Poussin kernel. The spectrum is verified
/// at construction: exactly 1 on Gamma(N) and 0 outside Gamma(2^d N).
TrigPoly hyperbolic_vp_kernel(std::int64_t N, int dim);

/// Rank decomposition of the d = 2 hyperbolic kernel (for large-grid norms).
Rank2Poly hyperbolic_vp_rank2(std::int64_t N);

/// Layer kernel dV_n = sum of A_s over n <= ||s||_1 <= n+2; acts as the
/// identity on T(dQ_n) under convolution.
TrigPoly layer_vp_kernel(int n);

/// Same kernel, merged into per-s1 rank terms.
Rank2Poly layer_vp_rank2(int n);

/// Jackson kernel (sin(n t/2) / (n sin(t/2)))^{2r}, built spectrally as the
/// r-fold self-product of the normalized Fejer-square factor; value 1 at 0,
/// spectrum inside [-r(n-1), r(n-1)], nonnegative.
TrigPoly jackson_kernel(int n, int r);

// ---------------------------------------------------------------------------
// CLI kernel descriptors, e.g. "vp:N=32,d=2", "jackson:n=16,r=2",
// "block:s=3x4", "layer:n=6", "vp1d:m=8", "dirichlet:m=4".
// ---------------------------------------------------------------------------

struct KernelSpec {
    std::string kind;
    std::map<std::string, std::string> args;
};

KernelSpec parse_kernel_spec(const std::string& text);
TrigPoly build_kernel(const KernelSpec& spec);

}  // namespace hcr
