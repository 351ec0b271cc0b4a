// SPDX-License-Identifier: MIT

#include "hcr/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hcr/indexsets.hpp"
#include "hcr/measure.hpp"
#include "hcr/transform.hpp"

namespace hcr {

namespace {

double grid_sup(const GridFunction& g) {
    double m = 0.0;
    for (const auto& v : g.values) m = std::max(m, std::abs(v));
    return m;
}

double node_max(const TrigPoly& f, const PointSet& X, const TorusPoint* shift) {
    double m = 0.0;
    for (const auto& x : X.points) {
        double coords[kMaxDim] = {0, 0, 0};
        for (int j = 0; j < X.dim; ++j)
            coords[j] = shift ? x[std::size_t(j)] - (*shift)[std::size_t(j)]
                              : x[std::size_t(j)];
        m = std::max(m, std::abs(f.eval(coords)));
    }
    return m;
}

// Index of the cell containing coordinate x on a G-cell axis. The small
// upward snap keeps exact grid nodes in their own cell despite rounding in
// x's computation (cells are effectively rotated by a sub-1e-9 epsilon,
// consistently across all membership tests).
std::int64_t cell_of(double x, std::int64_t g) {
    double frac = x / kTwoPi;
    frac -= std::floor(frac);
    std::int64_t c = std::int64_t(std::floor(frac * double(g) + 1e-9));
    if (c >= g) c -= g;
    if (c < 0) c += g;
    return c;
}

bool in_set(const GridSet& B, const TorusPoint& x) {
    const Grid& g = B.grid();
    std::int64_t flat = 0;
    for (int j = 0; j < g.dim; ++j)
        flat = flat * g.extent(j) + cell_of(x[std::size_t(j)], g.extent(j));
    return B.contains(flat);
}

// Exact on-grid shift search: if every point of X sits on a node of B's
// grid, x - y stays on the grid for grid shifts y, membership is an exact
// mask lookup, and a free shift exists whenever m |B| < 1 because the bad
// shifts cover at most m * count(B) of the G^d candidates.
std::optional<TorusPoint> aligned_shift_search(const PointSet& X, const GridSet& B) {
    const Grid& g = B.grid();
    std::vector<std::array<std::int64_t, kMaxDim>> nodes;
    nodes.reserve(X.size());
    for (const auto& x : X.points) {
        std::array<std::int64_t, kMaxDim> node{0, 0, 0};
        for (int j = 0; j < g.dim; ++j) {
            const double exact = x[std::size_t(j)] * double(g.extent(j)) / kTwoPi;
            const double rounded = std::round(exact);
            if (std::abs(exact - rounded) > 1e-9) return std::nullopt;
            node[std::size_t(j)] =
                std::int64_t(rounded) % g.extent(j);
            if (node[std::size_t(j)] < 0) node[std::size_t(j)] += g.extent(j);
        }
        nodes.push_back(node);
    }

    std::vector<std::uint8_t> bad(std::size_t(g.total()), 0);
    const auto& mask = B.mask();
    for (std::size_t c = 0; c < mask.size(); ++c) {
        if (!mask[c]) continue;
        std::array<std::int64_t, kMaxDim> cell{0, 0, 0};
        std::int64_t rem = std::int64_t(c);
        for (int j = g.dim - 1; j >= 0; --j) {
            cell[std::size_t(j)] = rem % g.extent(j);
            rem /= g.extent(j);
        }
        for (const auto& node : nodes) {
            std::int64_t flat = 0;
            for (int j = 0; j < g.dim; ++j) {
                std::int64_t y = (node[std::size_t(j)] - cell[std::size_t(j)]) %
                                 g.extent(j);
                if (y < 0) y += g.extent(j);
                flat = flat * g.extent(j) + y;
            }
            bad[std::size_t(flat)] = 1;
        }
    }
    for (std::size_t k = 0; k < bad.size(); ++k) {
        if (bad[k]) continue;
        std::array<std::int64_t, kMaxDim> cell{0, 0, 0};
        std::int64_t rem = std::int64_t(k);
        for (int j = g.dim - 1; j >= 0; --j) {
            cell[std::size_t(j)] = rem % g.extent(j);
            rem /= g.extent(j);
        }
        TorusPoint y{0, 0, 0};
        for (int j = 0; j < g.dim; ++j)
            y[std::size_t(j)] = kTwoPi * (double(cell[std::size_t(j)]) /
                                          double(g.extent(j)));
        return y;
    }
    return std::nullopt;
}

double torus_mod(double x) {
    double t = x - kTwoPi * std::floor(x / kTwoPi);
    if (t >= kTwoPi) t -= kTwoPi;
    return t;
}

// Bad shifts per (point, cell) pair form the left-open torus interval
// (lo, lo + len] in each axis; the anchor y = lo itself is always free of
// its own interval. Containment: 0 < (y - lo mod 2pi) <= len.
struct BadBox {
    double lo0 = 0, len0 = 0, lo1 = 0, len1 = 0;
};

bool axis_covered(double lo, double len, double y) {
    const double d = torus_mod(y - lo);
    return d > 0.0 && d <= len;
}

// General exact search over the arrangement of the translated boxes
// x^j - B (d <= 2). If the free set is nonempty it contains a point whose
// coordinates are box anchors (or 0), so those are the only candidates.
std::optional<TorusPoint> box_sweep_search(const PointSet& X, const GridSet& B) {
    const Grid& g = B.grid();
    if (g.dim > 2) return std::nullopt;

    std::vector<BadBox> boxes;
    const auto& mask = B.mask();
    const double h0 = kTwoPi / double(g.extent(0));
    const double h1 = g.dim == 2 ? kTwoPi / double(g.extent(1)) : kTwoPi;
    for (std::size_t c = 0; c < mask.size(); ++c) {
        if (!mask[c]) continue;
        const std::int64_t c0 = g.dim == 2 ? std::int64_t(c) / g.extent(1)
                                           : std::int64_t(c);
        const std::int64_t c1 = g.dim == 2 ? std::int64_t(c) % g.extent(1) : 0;
        for (const auto& x : X.points) {
            BadBox box;
            box.lo0 = torus_mod(x[0] - double(c0 + 1) * h0);
            box.len0 = h0;
            if (g.dim == 2) {
                box.lo1 = torus_mod(x[1] - double(c1 + 1) * h1);
                box.len1 = h1;
            }
            boxes.push_back(box);
        }
    }

    std::vector<double> candidates0{0.0};
    for (const auto& b : boxes) candidates0.push_back(b.lo0);
    std::sort(candidates0.begin(), candidates0.end());
    candidates0.erase(std::unique(candidates0.begin(), candidates0.end()),
                      candidates0.end());

    for (double y0 : candidates0) {
        std::vector<double> candidates1{0.0};
        bool blocked_everywhere = false;
        std::vector<const BadBox*> active;
        for (const auto& b : boxes) {
            if (!axis_covered(b.lo0, b.len0, y0)) continue;
            if (g.dim == 1) {
                blocked_everywhere = true;
                break;
            }
            active.push_back(&b);
            candidates1.push_back(b.lo1);
        }
        if (g.dim == 1) {
            if (!blocked_everywhere) return TorusPoint{y0, 0, 0};
            continue;
        }
        std::sort(candidates1.begin(), candidates1.end());
        candidates1.erase(std::unique(candidates1.begin(), candidates1.end()),
                          candidates1.end());
        for (double y1 : candidates1) {
            bool free = true;
            for (const BadBox* b : active)
                if (axis_covered(b->lo1, b->len1, y1)) {
                    free = false;
                    break;
                }
            if (free) return TorusPoint{y0, y1, 0};
        }
    }
    return std::nullopt;
}

}  // namespace

DiscretizationConstant discretization_constant(const TrigPoly& f, const PointSet& X,
                                               double oversample) {
    if (f.dim() != X.dim) throw config_error("dimension mismatch");
    if (X.size() == 0) throw config_error("empty point set");
    DiscretizationConstant out;
    const GridFunction g = evaluate_on_grid(f, grid_for(f, oversample));
    out.node_max = node_max(f, X, nullptr);
    out.sup = std::max(grid_sup(g), out.node_max);
    if (out.node_max <= out.sup * 1e-12) {
        out.infinite = true;
        out.D = std::numeric_limits<double>::infinity();
    } else {
        out.D = out.sup / out.node_max;
    }
    return out;
}

PointSet candidate_point_set(int n, int dim) {
    if (dim < 1 || dim > 2) throw config_error("candidate_point_set: d in {1,2}");
    if (n < 0 || n > kMaxLayerIndex) throw config_error("candidate_point_set: bad n");
    PointSet X;
    X.dim = dim;
    std::set<TorusPoint> seen;
    for (const auto& s : compositions(n, dim)) {
        std::array<std::int64_t, kMaxDim> counts{1, 1, 1};
        for (int j = 0; j < dim; ++j)
            counts[std::size_t(j)] = (std::int64_t(1) << s[std::size_t(j)]) + 1;
        std::array<std::int64_t, kMaxDim> idx{0, 0, 0};
        const std::int64_t total = counts[0] * (dim == 2 ? counts[1] : 1);
        for (std::int64_t c = 0; c < total; ++c) {
            TorusPoint p{0, 0, 0};
            for (int j = 0; j < dim; ++j)
                p[std::size_t(j)] = kTwoPi * (double(idx[std::size_t(j)]) /
                                              double(counts[std::size_t(j)]));
            if (seen.insert(p).second) X.points.push_back(p);
            for (int j = dim - 1; j >= 0; --j) {
                if (++idx[std::size_t(j)] < counts[std::size_t(j)]) break;
                idx[std::size_t(j)] = 0;
            }
        }
    }
    std::sort(X.points.begin(), X.points.end());
    return X;
}

DiscretizationScan empirical_discretization_scan(int n, int dim, int draws,
                                                 std::uint64_t seed) {
    if (draws < 1) throw config_error("scan needs draws >= 1");
    const PointSet X = candidate_point_set(n, dim);
    const IndexSet spectrum = step_hyperbolic(n, dim);
    DiscretizationScan out;
    out.n = n;
    out.dim = dim;
    out.m = X.size();
    for (int d = 0; d < draws; ++d) {
        Rng rng(derive_seed(seed, std::uint64_t(d)));
        TrigPolyBuilder b(dim);
        for (const Freq& k : spectrum.members()) b.add(k, rng.complex_gaussian());
        const auto dc = discretization_constant(b.build(), X);
        if (dc.infinite)
            out.any_infinite = true;
        else
            out.max_D = std::max(out.max_D, dc.D);
    }
    out.rate = std::pow(double(n), double(dim - 1));
    out.ratio = out.max_D / out.rate;
    return out;
}

ShiftResult find_avoiding_shift(const PointSet& X, const GridSet& B) {
    if (X.dim != B.grid().dim) throw config_error("dimension mismatch");
    ShiftResult out;
    auto verify = [&](const TorusPoint& y) {
        for (const auto& x : X.points) {
            TorusPoint diff{0, 0, 0};
            for (int j = 0; j < X.dim; ++j)
                diff[std::size_t(j)] = x[std::size_t(j)] - y[std::size_t(j)];
            if (in_set(B, diff)) return false;
        }
        return true;
    };
    if (auto y = aligned_shift_search(X, B)) {
        if (verify(*y)) {
            out.found = true;
            out.y = *y;
            return out;
        }
    }
    if (auto y = box_sweep_search(X, B)) {
        if (verify(*y)) {
            out.found = true;
            out.y = *y;
            return out;
        }
    }
    return out;
}

RemezFromDiscretization discretization_to_remez(const TrigPoly& f, const PointSet& X,
                                                double D, const GridSet& B,
                                                std::int64_t shift_grid_per_axis,
                                                double oversample) {
    if (f.dim() != X.dim || f.dim() != B.grid().dim)
        throw config_error("dimension mismatch");
    RemezFromDiscretization out;
    out.D = D;

    const GridFunction g = evaluate_on_grid(f, grid_for(f, oversample));
    out.sup = grid_sup(g);
    if (out.sup == 0.0) throw config_error("zero function");

    // Shift-uniformity of D on the tested shift grid.
    const std::int64_t S = shift_grid_per_axis;
    const std::int64_t shift_total = f.dim() == 2 ? S * S : S;
    for (std::int64_t c = 0; c < shift_total; ++c) {
        TorusPoint y{0, 0, 0};
        y[0] = kTwoPi * (double(f.dim() == 2 ? c / S : c) / double(S));
        if (f.dim() == 2) y[1] = kTwoPi * (double(c % S) / double(S));
        const double nm = node_max(f, X, &y);
        if (out.sup > D * nm * (1.0 + 1e-9)) {
            out.violating_shift = y;
            return out;
        }
    }

    const ShiftResult shift = find_avoiding_shift(X, B);
    if (!shift.found) return out;
    out.shift = shift.y;

    // Certificate: every x^j - y* lies in the complement, so the node max at
    // y* is a lower bound for sup over B^c; re-verify on the full grid.
    const double nm_star = node_max(f, X, &shift.y);
    if (out.sup > D * nm_star * (1.0 + 1e-9)) {
        out.violating_shift = shift.y;
        return out;
    }
    double outside = nm_star;
    const Grid& fg = g.grid;
    for (std::int64_t flat = 0; flat < fg.total(); ++flat) {
        TorusPoint x{0, 0, 0};
        std::int64_t rem = flat;
        for (int j = fg.dim - 1; j >= 0; --j) {
            x[std::size_t(j)] = fg.point(j, rem % fg.extent(j));
            rem /= fg.extent(j);
        }
        if (!in_set(B, x))
            outside = std::max(outside, std::abs(g.values[std::size_t(flat)]));
    }
    out.sup_outside = outside;
    out.ok = out.sup <= D * outside * (1.0 + 1e-9);
    return out;
}

}  // namespace hcr
