// SPDX-License-Identifier: MIT

#include "hcr/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcr/config.hpp"

namespace hcr {

namespace {

bool term_key_less(const TrigPoly::Term& a, const TrigPoly::Term& b) {
    return a.k < b.k;
}

}  // namespace

TrigPoly TrigPoly::constant(int dim, cplx value) {
    TrigPolyBuilder b(dim);
    b.add(Freq{}, value);
    return b.build();
}

TrigPoly TrigPoly::harmonic(int dim, const Freq& k, cplx value) {
    TrigPolyBuilder b(dim);
    b.add(k, value);
    return b.build();
}

cplx TrigPoly::coeff(const Freq& k) const {
    const Term probe{k, {}};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_key_less);
    if (it != terms_.end() && it->k == k) return it->c;
    return {};
}

std::int64_t TrigPoly::max_degree(int axis) const {
    std::int64_t d = 0;
    for (const Term& t : terms_)
        d = std::max<std::int64_t>(d, std::abs(std::int64_t(t.k[axis])));
    return d;
}

IndexSet TrigPoly::support(const std::string& label) const {
    std::vector<Freq> keys;
    keys.reserve(terms_.size());
    for (const Term& t : terms_) keys.push_back(t.k);
    return IndexSet(dim_, std::move(keys), label);
}

cplx TrigPoly::eval(const double* x) const {
    cplx acc{};
    for (const Term& t : terms_) {
        double phase = 0.0;
        for (int j = 0; j < dim_; ++j) phase += double(t.k[j]) * x[j];
        acc += t.c * cplx(std::cos(phase), std::sin(phase));
    }
    return acc;
}

double TrigPoly::parseval_power() const {
    double s = 0.0;
    for (const Term& t : terms_) s += std::norm(t.c);
    return s;
}

bool TrigPoly::real_even() const {
    for (const Term& t : terms_) {
        if (t.c.imag() != 0.0) return false;
        Freq neg = t.k;
        for (int j = 0; j < dim_; ++j) neg[j] = -neg[j];
        if (coeff(neg) != t.c) return false;
    }
    return true;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
    if (other.dim_ != dim_)
        throw config_error("TrigPoly dimension mismatch in addition");
    TrigPolyBuilder b(dim_);
    b.add(*this);
    b.add(other);
    *this = b.build();
    return *this;
}

TrigPoly& TrigPoly::operator*=(cplx scalar) {
    if (scalar == cplx{}) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.c *= scalar;
    return *this;
}

std::string TrigPoly::to_text() const {
    std::ostringstream os;
    os.precision(17);
    for (const Term& t : terms_) {
        for (int j = 0; j < dim_; ++j) os << t.k[j] << ' ';
        os << t.c.real() << ' ' << t.c.imag() << '\n';
    }
    return os.str();
}

TrigPoly TrigPoly::from_text(int dim, const std::string& text) {
    TrigPolyBuilder b(dim);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Freq k;
        for (int j = 0; j < dim; ++j)
            if (!(ls >> k[j])) throw config_error("malformed TrigPoly line: " + line);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im)) throw config_error("malformed TrigPoly line: " + line);
        b.add(k, cplx(re, im));
    }
    return b.build();
}

void TrigPolyBuilder::add(const TrigPoly& p, cplx scale) {
    buf_.reserve(buf_.size() + p.size());
    for (const TrigPoly::Term& t : p.terms()) buf_.push_back({t.k, t.c * scale});
}

TrigPoly TrigPolyBuilder::build() {
    std::sort(buf_.begin(), buf_.end(), term_key_less);
    TrigPoly out(dim_);
    out.terms_.reserve(buf_.size());
    std::size_t i = 0;
    while (i < buf_.size()) {
        Freq k = buf_[i].k;
        cplx acc{};
        while (i < buf_.size() && buf_[i].k == k) acc += buf_[i++].c;
        if (std::abs(acc) > kCoeffPruneThreshold) out.terms_.push_back({k, acc});
    }
    buf_.clear();
    return out;
}

TrigPoly convolve(const TrigPoly& f, const TrigPoly& K) {
    if (f.dim() != K.dim()) throw config_error("convolve: dimension mismatch");
    TrigPolyBuilder b(f.dim());
    for (const TrigPoly::Term& t : f.terms()) {
        const cplx kc = K.coeff(t.k);
        if (kc != cplx{}) b.add(t.k, t.c * kc);
    }
    return b.build();
}

namespace {

// Exact univariate convolution through a dense window over the result range.
TrigPoly multiply_1d(const TrigPoly& f, const TrigPoly& g) {
    const std::int64_t deg = f.max_degree(0) + g.max_degree(0);
    if (std::size_t(2 * deg + 1) > runtime_config().support_cap)
        throw resource_limit_error("multiply: univariate degree window exceeds cap");
    std::vector<cplx> window(std::size_t(2 * deg + 1));
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            window[std::size_t(a.k[0] + b.k[0] + deg)] += a.c * b.c;
    TrigPolyBuilder out(1);
    for (std::int64_t k = -deg; k <= deg; ++k) {
        const cplx c = window[std::size_t(k + deg)];
        if (c != cplx{}) out.add(freq1(std::int32_t(k)), c);
    }
    return out.build();
}

}  // namespace

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
    if (f.dim() != g.dim()) throw config_error("multiply: dimension mismatch");
    if (f.empty() || g.empty()) return TrigPoly::zero(f.dim());
    const std::size_t pairs = f.size() * g.size();
    if (pairs > runtime_config().support_cap)
        throw resource_limit_error("multiply: result support bound " +
                                   std::to_string(pairs) + " exceeds configured cap");
    if (f.dim() == 1) return multiply_1d(f, g);
    TrigPolyBuilder b(f.dim());
    for (const auto& ta : f.terms())
        for (const auto& tb : g.terms()) {
            Freq k = ta.k;
            for (int j = 0; j < f.dim(); ++j) k[j] += tb.k[j];
            b.add(k, ta.c * tb.c);
        }
    return b.build();
}

TrigPoly tensor(const TrigPoly& f, const TrigPoly& g) {
    const int d = f.dim() + g.dim();
    if (d > kMaxDim) throw config_error("tensor: combined dimension exceeds cap");
    TrigPolyBuilder b(d);
    for (const auto& ta : f.terms())
        for (const auto& tb : g.terms()) {
            Freq k = ta.k;
            for (int j = 0; j < g.dim(); ++j) k[f.dim() + j] = tb.k[j];
            b.add(k, ta.c * tb.c);
        }
    return b.build();
}

TrigPoly imag_part(const TrigPoly& f) {
    TrigPolyBuilder b(f.dim());
    const cplx half_over_i(0.0, -0.5);  // 1/(2i)
    for (const auto& t : f.terms()) {
        Freq neg = t.k;
        for (int j = 0; j < f.dim(); ++j) neg[j] = -neg[j];
        b.add(t.k, half_over_i * t.c);
        b.add(neg, -half_over_i * std::conj(t.c));
    }
    return b.build();
}

}  // namespace hcr
