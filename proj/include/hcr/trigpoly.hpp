// SPDX-License-Identifier: MIT
//
// Sparse spectral representation of trigonometric polynomials on T^d and
// exact spectral arithmetic. A TrigPoly is a finite map frequency -> complex
// coefficient; all arithmetic stays in coefficient space, so structural
// claims ("this coefficient is exactly zero") survive.
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hcr/indexsets.hpp"

namespace hcr {

using cplx = std::complex<double>;

class TrigPoly {
public:
    struct Term {
        Freq k;
        cplx c;
    };

    TrigPoly() = default;
    explicit TrigPoly(int dim) : dim_(dim) {}

    static TrigPoly zero(int dim) { return TrigPoly(dim); }
    static TrigPoly constant(int dim, cplx value);
    static TrigPoly harmonic(int dim, const Freq& k, cplx value);

    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Coefficient at k; zero when absent.
    cplx coeff(const Freq& k) const;

    /// Largest |k_axis| over the support (0 for the zero polynomial).
    std::int64_t max_degree(int axis) const;

    IndexSet support(const std::string& label = "supp") const;

    /// Direct evaluation at a point (O(size) per point).
    cplx eval(const double* x) const;

    /// sum |c_k|^2 — the L2 norm squared under normalized measure.
    double parseval_power() const;

    /// True when every coefficient is exactly real and c(k) == c(-k),
    /// i.e. the polynomial is a real, coordinate-even function.
    bool real_even() const;

    TrigPoly& operator+=(const TrigPoly& other);
    TrigPoly& operator*=(cplx scalar);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator*(TrigPoly a, cplx s) { return a *= s; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
        TrigPoly nb = b;
        nb *= cplx(-1.0, 0.0);
        return a += nb;
    }

    /// Lines "k_1 ... k_d re im".
    std::string to_text() const;
    static TrigPoly from_text(int dim, const std::string& text);

    friend class TrigPolyBuilder;

private:
    int dim_ = 1;
    std::vector<Term> terms_;  // sorted lexicographically by k, coefficients pruned
};

/// Accumulates (frequency, coefficient) contributions, then sorts, combines
/// duplicates and prunes magnitudes <= kCoeffPruneThreshold.
class TrigPolyBuilder {
public:
    explicit TrigPolyBuilder(int dim) : dim_(dim) {}

    void add(const Freq& k, cplx c) { buf_.push_back({k, c}); }
    void add(const TrigPoly& p, cplx scale = cplx(1.0, 0.0));
    std::size_t pending() const { return buf_.size(); }

    TrigPoly build();

private:
    int dim_;
    std::vector<TrigPoly::Term> buf_;
};

/// Normalized convolution (2pi)^{-d} integral f(u) K(x-u) du, realized
/// spectrally: coefficient at k of the result is f_hat(k) * K_hat(k).
TrigPoly convolve(const TrigPoly& f, const TrigPoly& K);

/// Pointwise product; spectral convolution of the coefficient maps. Exact
/// complex arithmetic; throws resource_limit_error when the amount of work
/// or the result support exceeds the configured cap.
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g);

/// Tensor product (f in d1 vars) x (g in d2 vars) -> poly in d1+d2 vars.
TrigPoly tensor(const TrigPoly& f, const TrigPoly& g);

/// Imaginary part as a real function: coefficients (c(k) - conj(c(-k)))/2i.
TrigPoly imag_part(const TrigPoly& f);

}  // namespace hcr
