// SPDX-License-Identifier: MIT
//
// d = 2 Riesz products over the residue families H_n(a,b): normalized block
// factors t_s = A_s / M, the product Phi = prod (1 + i t_s / sqrt(N)), its
// split into 1 + linear part + high-frequency remainder, and the corrected
// layer kernel K = dV_n - T with T spectrally orthogonal to T(Q_n).
//
// Products are kept as sums of tensor terms (one per factor subset), so
// spectral-support assertions are exact and nothing large is materialized
// unless explicitly requested.
#pragma once

#include "hcr/indexsets.hpp"
#include "hcr/norms.hpp"
#include "hcr/rank2.hpp"
#include "hcr/remez.hpp"
#include "hcr/trigpoly.hpp"

namespace hcr {

struct RieszConfig {
    int n = 0;  // layer index
    int a = 6;  // progression modulus, >= 6
    int b = 0;  // residue
    ResidueFamily family;
    double M = 0.0;  // max over the family of the grid sup of |A_s|
    int count = 0;   // |H_n(a,b)|
};

/// Builds the configuration; requires a >= 6 and a nonempty family.
RieszConfig make_riesz_config(int n, int a, int b, double factor_oversample = 8.0);

/// One multiplicand 1 + lambda * (u tensor v) of a product.
struct ProductFactor {
    TrigPoly u;  // univariate
    TrigPoly v;  // univariate
};

/// Expansion of prod_j (1 + lambda u_j v_j) into subset terms
/// scalar_S * (prod u_j) tensor (prod v_j); order = |S|.
struct ProductTerm {
    cplx scalar;
    TrigPoly u;
    TrigPoly v;
    int order = 0;
};

std::vector<ProductTerm> expand_product(const std::vector<ProductFactor>& factors,
                                        cplx lambda);

/// Subset expansion of the Riesz product for cfg with lambda = i/(M sqrt N).
std::vector<ProductTerm> riesz_expansion(const RieszConfig& cfg);

/// Phi as a flat sparse polynomial (cap-checked).
TrigPoly riesz_product(const RieszConfig& cfg);

/// Per-factor pointwise bound: max |t_s| over the evaluation grid (at most 1
/// by the normalization), the implied product bound (1+1/N)^{N/2}, and
/// whether |Phi| stays below it at every grid node.
struct ProductBound {
    double max_factor_abs = 0.0;
    double bound = 1.0;
    bool ok = false;
};
ProductBound check_product_bound(const RieszConfig& cfg,
                                 double factor_oversample = 8.0);

/// Split Phi = 1 + (i/sqrt N) sum t_s + g and assert that g has no spectrum
/// inside Q_{n+a-6} (exact support check; construction_error on violation).
struct RieszDecomposition {
    TrigPoly linear_part;  // 1 + (i/sqrt N) sum t_s
    TrigPoly remainder;    // g
};
RieszDecomposition riesz_decompose(const TrigPoly& phi, const RieszConfig& cfg);

/// Exact orthogonality of the order >= 2 expansion terms to T(Q_m):
/// smallest dyadic scale sum over the term supports must exceed m.
bool expansion_orthogonal_to(const std::vector<ProductTerm>& terms, int m);

// ---------------------------------------------------------------------------
// Corrected layer kernel
// ---------------------------------------------------------------------------

struct LayerKernelStats {
    double l1_raw = 0.0;    // ||dV_n||_1
    double linf_raw = 0.0;  // ||dV_n||_inf
    double l1 = 0.0;        // ||K||_1
    double linf = 0.0;      // ||K||_inf
    std::int64_t grid0 = 0;
    std::int64_t grid1 = 0;
};

struct LayerKernelResult {
    int n = 0;
    TrigPoly kernel;          // K = dV_n - T, materialized
    Rank2Poly kernel_rank;    // same kernel as rank terms
    Rank2Poly raw_rank;       // dV_n
    bool correction_zero = true;
    LayerKernelStats stats;
};

/// Assembles K from the Riesz remainders of every residue family on layers
/// n..n+2 (a = 6); blocks with min(s1, s2) < 6 enter uncorrected. Verifies
/// exactly that K acts as the identity on T(dQ_n) and that the correction
/// is orthogonal to T(Q_n).
LayerKernelResult modified_layer_kernel(int n, double norm_oversample = 2.0);

/// Sup-norm Remez check for f in T(dQ_n) with the measured kernel norms:
/// budget 1/(2 ||K||_inf), bound 2 ||K||_1.
SupRemezReport verify_layer_remez(const TrigPoly& f, const LayerKernelResult& K,
                                  double oversample = 2.0);

}  // namespace hcr
