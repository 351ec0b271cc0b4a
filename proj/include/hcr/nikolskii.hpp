// SPDX-License-Identifier: MIT
//
// Nikolskii quotients ||f||_p / ||f||_q over hyperbolic-cross polynomials:
// candidate-family estimates of the supremum, the Jackson-kernel lower-bound
// witness, and the measured-constant sup bound for quasi-norm exponents.
#pragma once

#include <cstdint>
#include <string>

#include "hcr/kernels.hpp"
#include "hcr/measure.hpp"
#include "hcr/remez.hpp"

namespace hcr {

struct RatioSample {
    std::string witness;
    double p = 0.0;
    double q = 0.0;
    double ratio = 0.0;
    std::int64_t scale = 0;  // N or n
    int dim = 1;
};

/// ||g||_p / ||g||_q, q < p. Errors on the zero function.
double nikolskii_ratio(const GridFunction& g, double p, double q);

/// Theoretical growth rates, base-2 logarithms.
double nikolskii_rate_sup(std::int64_t N, int dim, double q);
double nikolskii_rate(std::int64_t N, double p, double q);

struct ScalingRow {
    std::int64_t scale = 0;
    double measured = 0.0;
    double rate = 0.0;
    double ratio = 0.0;  // measured / rate
    std::string witness;
    std::uint64_t seed = 0;
    std::string grid;
    double tolerance = 0.0;
};

/// Best ratio over a candidate family (hyperbolic VP kernel, restricted
/// layer kernel, Jackson tensor products, seeded random draws). The result
/// is a lower bound for the supremum, reported against the theoretical rate.
ScalingRow nikolskii_sup_estimate(std::int64_t N, int dim, double p, double q,
                                  int random_draws, std::uint64_t seed,
                                  double oversample = 8.0);

/// Quasi-norm sup bound with a measured constant:
/// ||g||_inf <= (C_d N)^{1/q} ||g||_q for 0 < q < 1, where C_d was measured
/// on a q = 1 calibration corpus containing g.
CheckOutcome check_sup_quasinorm_bound(const GridFunction& g, double q, double C_d,
                                       std::int64_t N);

/// Ratio of the Jackson kernel as the lower-bound witness. Requires
/// r > 1/(2p) when p < 1 (the kernel power must make |J|^p integrable
/// against the quadrature).
RatioSample jackson_lower_bound(int n, int r, double p, double q,
                                double oversample = 8.0);

/// Least-squares slope of log2(y) against log2(x), with residual.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};
SlopeFit fit_log2_slope(const std::vector<std::pair<double, double>>& xy);

}  // namespace hcr
