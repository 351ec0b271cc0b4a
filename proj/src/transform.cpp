// SPDX-License-Identifier: MIT

#include "hcr/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <thread>

namespace hcr {

namespace {

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// RAII in-place 1-D transform on an owned fftw buffer.
class Fft1D {
public:
    Fft1D(std::int64_t n, int sign) : n_(n) {
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * std::size_t(n)));
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan_ = fftw_plan_dft_1d(int(n), buf_, buf_, sign, FFTW_ESTIMATE);
    }
    ~Fft1D() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(buf_);
    }
    Fft1D(const Fft1D&) = delete;
    Fft1D& operator=(const Fft1D&) = delete;

    std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buf_); }
    std::int64_t size() const { return n_; }
    void execute() { fftw_execute(plan_); }

private:
    std::int64_t n_;
    fftw_complex* buf_;
    fftw_plan plan_;
};

std::int64_t next_pow2(std::int64_t n) {
    std::int64_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::int64_t wrap(std::int64_t k, std::int64_t g) {
    const std::int64_t m = k % g;
    return m < 0 ? m + g : m;
}

void check_budget(const Grid& grid) {
    const std::size_t bytes = std::size_t(grid.total()) * sizeof(std::complex<double>);
    if (bytes > runtime_config().mem_budget_bytes)
        throw resource_limit_error(
            "grid of " + std::to_string(grid.total()) +
            " cells exceeds the memory budget; streaming evaluation required");
}

// Roots-of-unity table: w[t] = exp(i 2 pi t / g).
std::vector<cplx> unit_roots(std::int64_t g) {
    std::vector<cplx> w(static_cast<std::size_t>(g));
    for (std::int64_t t = 0; t < g; ++t) {
        const double a = kTwoPi * double(t) / double(g);
        w[std::size_t(t)] = cplx(std::cos(a), std::sin(a));
    }
    return w;
}

}  // namespace

namespace detail {

bool stronger(const TopCell& a, const TopCell& b) {
    if (a.abs != b.abs) return a.abs > b.abs;
    return a.flat < b.flat;
}

void TopPool::offer(double abs, std::uint64_t flat, std::uint32_t weight) {
    const TopCell cand{abs, flat, weight};
    auto weaker_on_top = [](const TopCell& a, const TopCell& b) {
        return stronger(a, b);  // std heap: comparator true => a below b
    };
    if (weight_ < target_ + 1) {
        heap_.push_back(cand);
        std::push_heap(heap_.begin(), heap_.end(), weaker_on_top);
        weight_ += weight;
        return;
    }
    if (!stronger(cand, heap_.front())) return;
    heap_.push_back(cand);
    std::push_heap(heap_.begin(), heap_.end(), weaker_on_top);
    weight_ += weight;
    while (weight_ - heap_.front().weight >= target_ + 1) {
        weight_ -= heap_.front().weight;
        std::pop_heap(heap_.begin(), heap_.end(), weaker_on_top);
        heap_.pop_back();
    }
}

void TopPool::merge_into(std::vector<TopCell>& out) const {
    out.insert(out.end(), heap_.begin(), heap_.end());
}

std::vector<TopCell> TopPool::finalize(std::vector<TopCell> pool, std::uint64_t target) {
    std::sort(pool.begin(), pool.end(), stronger);
    std::uint64_t w = 0;
    std::size_t keep = 0;
    while (keep < pool.size() && w < target + 1) w += pool[keep++].weight;
    pool.resize(keep);
    return pool;
}

void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, unsigned)>& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_threads(),
                                                             unsigned(std::max<std::int64_t>(n, 1))));
    if (workers == 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::int64_t lo = std::min<std::int64_t>(n, std::int64_t(t) * chunk);
        const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
        pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

Grid grid_for(const TrigPoly& f, double oversample, std::int64_t min_extent) {
    if (oversample < 1.0) throw config_error("grid oversample must be >= 1");
    Grid g;
    g.dim = f.dim();
    for (int j = 0; j < f.dim(); ++j) {
        const std::int64_t nyquist = 2 * f.max_degree(j) + 1;
        const double want = oversample * double(nyquist);
        g.size[std::size_t(j)] = next_pow2(std::max<std::int64_t>(
            std::int64_t(std::ceil(want)), min_extent));
    }
    return g;
}

GridFunction evaluate_on_grid(const TrigPoly& f, const Grid& grid) {
    if (grid.dim != f.dim()) throw config_error("evaluate_on_grid: dimension mismatch");
    for (int j = 0; j < grid.dim; ++j)
        if (grid.extent(j) < 1) throw config_error("evaluate_on_grid: empty grid");
    check_budget(grid);

    const std::int64_t total = grid.total();
    fftw_complex* buf =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * std::size_t(total)));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        int n[kMaxDim];
        for (int j = 0; j < grid.dim; ++j) n[j] = int(grid.extent(j));
        plan = fftw_plan_dft(grid.dim, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    std::memset(buf, 0, sizeof(fftw_complex) * std::size_t(total));

    auto* cbuf = reinterpret_cast<std::complex<double>*>(buf);
    for (const auto& t : f.terms()) {
        std::int64_t flat = 0;
        for (int j = 0; j < grid.dim; ++j)
            flat = flat * grid.extent(j) + wrap(t.k[j], grid.extent(j));
        cbuf[flat] += t.c;
    }
    fftw_execute(plan);

    GridFunction out;
    out.grid = grid;
    out.values.assign(cbuf, cbuf + total);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
    return out;
}

TrigPoly coefficients_from_grid(const GridFunction& samples, const IndexSet& support) {
    const Grid& grid = samples.grid;
    if (grid.dim != support.dim())
        throw config_error("coefficients_from_grid: dimension mismatch");
    for (int j = 0; j < grid.dim; ++j) {
        std::int64_t maxdeg = 0;
        for (const Freq& k : support.members())
            maxdeg = std::max<std::int64_t>(maxdeg, std::abs(std::int64_t(k[j])));
        if (grid.extent(j) < 2 * maxdeg + 1)
            throw config_error("coefficients_from_grid: grid aliases the requested "
                               "support (need G >= 2 maxdeg + 1)");
    }

    const std::int64_t total = grid.total();
    fftw_complex* buf =
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * std::size_t(total)));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        int n[kMaxDim];
        for (int j = 0; j < grid.dim; ++j) n[j] = int(grid.extent(j));
        plan = fftw_plan_dft(grid.dim, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    std::memcpy(buf, samples.values.data(), sizeof(fftw_complex) * std::size_t(total));
    fftw_execute(plan);

    auto* cbuf = reinterpret_cast<std::complex<double>*>(buf);
    TrigPolyBuilder b(grid.dim);
    const double scale = 1.0 / double(total);
    for (const Freq& k : support.members()) {
        std::int64_t flat = 0;
        for (int j = 0; j < grid.dim; ++j)
            flat = flat * grid.extent(j) + wrap(k[j], grid.extent(j));
        b.add(k, cbuf[flat] * scale);
    }
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
    return b.build();
}

namespace {

struct SliceAccum {
    std::vector<double> power;  // one per exponent
    double max_abs = 0.0;
    std::int64_t arg = 0;
};

// Shared scaffolding for both the dense reducer and the streaming sweep:
// per-slice accumulation, serial combine over slices in order.
class ReductionAssembler {
public:
    ReductionAssembler(const ReductionSpec& spec, std::uint64_t total_cells,
                       std::int64_t slice_count)
        : spec_(spec), slices_(std::size_t(slice_count)) {
        red_.total_cells = total_cells;
        red_.p_list = spec.p_list;
    }

    // values: contiguous samples of one slice; weights: nullptr for weight 1.
    void accumulate_slice(std::int64_t slice, const double* abs_vals,
                          const std::uint32_t* weights, std::int64_t count,
                          std::uint64_t flat_base, detail::TopPool& pool) {
        SliceAccum acc;
        acc.power.assign(spec_.p_list.size(), 0.0);
        acc.max_abs = -1.0;
        for (std::int64_t i = 0; i < count; ++i) {
            const double a = abs_vals[i];
            const double w = weights ? double(weights[i]) : 1.0;
            for (std::size_t pi = 0; pi < spec_.p_list.size(); ++pi)
                acc.power[pi] += w * pow_abs(a, spec_.p_list[pi]);
            if (a > acc.max_abs) {
                acc.max_abs = a;
                acc.arg = i;
            }
            pool.offer(a, flat_base + std::uint64_t(i),
                       weights ? weights[i] : std::uint32_t(1));
        }
        slices_[std::size_t(slice)] = std::move(acc);
    }

    Reductions finish(const std::vector<detail::TopPool>& pools,
                      const std::function<std::uint64_t(std::int64_t, std::int64_t)>&
                          slice_flat) {
        red_.power_sums.assign(spec_.p_list.size(), 0.0);
        red_.max_abs = -1.0;
        for (std::size_t s = 0; s < slices_.size(); ++s) {
            const SliceAccum& acc = slices_[s];
            for (std::size_t pi = 0; pi < spec_.p_list.size(); ++pi)
                red_.power_sums[pi] += acc.power[pi];
            if (acc.max_abs > red_.max_abs) {
                red_.max_abs = acc.max_abs;
                red_.argmax = slice_flat(std::int64_t(s), acc.arg);
            }
        }
        if (red_.max_abs < 0.0) red_.max_abs = 0.0;
        std::vector<TopCell> pool;
        for (const auto& p : pools) p.merge_into(pool);
        red_.top = detail::TopPool::finalize(std::move(pool), spec_.top_cells);
        return std::move(red_);
    }

    static double pow_abs(double a, double p) {
        if (p == 1.0) return a;
        if (p == 2.0) return a * a;
        if (p == 4.0) {
            const double s = a * a;
            return s * s;
        }
        return std::pow(a, p);
    }

private:
    ReductionSpec spec_;
    std::vector<SliceAccum> slices_;
    Reductions red_;
};

}  // namespace

Reductions reduce(const GridFunction& g, const ReductionSpec& spec) {
    const std::int64_t total = g.grid.total();
    const std::int64_t slice_len = g.grid.extent(g.grid.dim - 1);
    const std::int64_t slices = total / slice_len;
    ReductionAssembler asmr(spec, std::uint64_t(total), slices);
    std::vector<detail::TopPool> pools(worker_threads(),
                                       detail::TopPool(spec.top_cells));
    detail::parallel_chunks(slices, [&](std::int64_t lo, std::int64_t hi, unsigned tid) {
        std::vector<double> abs_vals(static_cast<std::size_t>(slice_len));
        for (std::int64_t s = lo; s < hi; ++s) {
            const auto* src = g.values.data() + s * slice_len;
            for (std::int64_t i = 0; i < slice_len; ++i)
                abs_vals[std::size_t(i)] = std::abs(src[i]);
            asmr.accumulate_slice(s, abs_vals.data(), nullptr, slice_len,
                                  std::uint64_t(s * slice_len), pools[tid]);
        }
    });
    return asmr.finish(pools, [slice_len](std::int64_t s, std::int64_t i) {
        return std::uint64_t(s * slice_len + i);
    });
}

Reductions evaluate_reduced(const TrigPoly& f, const Grid& grid,
                            const ReductionSpec& spec) {
    if (grid.dim != f.dim()) throw config_error("evaluate_reduced: dimension mismatch");
    if (grid.dim == 1 || std::size_t(grid.total()) * sizeof(cplx) <=
                             runtime_config().mem_budget_bytes) {
        return reduce(evaluate_on_grid(f, grid), spec);
    }
    if (grid.dim != 2)
        throw config_error("evaluate_reduced: streaming implemented for d <= 2");

    const std::int64_t g0 = grid.extent(0);
    const std::int64_t g1 = grid.extent(1);

    // Precompute wrapped indices once; slice work is then a gather of
    // root-of-unity twiddles plus one FFT per slice.
    struct PackedTerm {
        std::int64_t k0mod, k1mod;
        cplx c;
    };
    std::vector<PackedTerm> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms())
        terms.push_back({wrap(t.k[0], g0), wrap(t.k[1], g1), t.c});
    const auto roots0 = unit_roots(g0);

    ReductionAssembler asmr(spec, std::uint64_t(grid.total()), g0);
    std::vector<detail::TopPool> pools(worker_threads(),
                                       detail::TopPool(spec.top_cells));

    detail::parallel_chunks(g0, [&](std::int64_t lo, std::int64_t hi, unsigned tid) {
        Fft1D fft(g1, FFTW_BACKWARD);
        std::vector<double> abs_vals(static_cast<std::size_t>(g1));
        for (std::int64_t t0 = lo; t0 < hi; ++t0) {
            auto* coef = fft.data();
            std::fill(coef, coef + g1, cplx{});
            for (const PackedTerm& t : terms) {
                const cplx w = roots0[std::size_t((t.k0mod * t0) % g0)];
                coef[t.k1mod] += t.c * w;
            }
            fft.execute();
            for (std::int64_t i = 0; i < g1; ++i)
                abs_vals[std::size_t(i)] = std::abs(fft.data()[i]);
            asmr.accumulate_slice(t0, abs_vals.data(), nullptr, g1,
                                  std::uint64_t(t0 * g1), pools[tid]);
        }
    });
    return asmr.finish(pools, [g1](std::int64_t s, std::int64_t i) {
        return std::uint64_t(s * g1 + i);
    });
}

}  // namespace hcr
