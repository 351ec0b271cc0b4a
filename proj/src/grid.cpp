// SPDX-License-Identifier: MIT

#include "hcr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hcr {

GridSet::GridSet(Grid grid, std::vector<std::uint8_t> mask)
    : grid_(grid), mask_(std::move(mask)) {
    if (std::int64_t(mask_.size()) != grid_.total())
        throw config_error("GridSet mask size does not match grid");
    count_ = std::count_if(mask_.begin(), mask_.end(),
                           [](std::uint8_t m) { return m != 0; });
}

GridSet GridSet::empty(const Grid& g) {
    return GridSet(g, std::vector<std::uint8_t>(std::size_t(g.total()), 0));
}

GridSet GridSet::full(const Grid& g) {
    return GridSet(g, std::vector<std::uint8_t>(std::size_t(g.total()), 1));
}

GridSet GridSet::complement() const {
    std::vector<std::uint8_t> m(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) m[i] = mask_[i] ? 0 : 1;
    return GridSet(grid_, std::move(m));
}

std::string GridSet::to_rle() const {
    std::ostringstream os;
    os << grid_.dim;
    for (int j = 0; j < grid_.dim; ++j) os << ' ' << grid_.extent(j);
    os << '\n';
    std::size_t i = 0;
    while (i < mask_.size()) {
        if (!mask_[i]) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < mask_.size() && mask_[i]) ++i;
        os << start << ' ' << (i - start) << '\n';
    }
    return os.str();
}

GridSet GridSet::from_rle(const std::string& text) {
    std::istringstream is(text);
    Grid g;
    if (!(is >> g.dim) || g.dim < 1 || g.dim > kMaxDim)
        throw config_error("GridSet: malformed RLE header");
    for (int j = 0; j < g.dim; ++j)
        if (!(is >> g.size[std::size_t(j)]))
            throw config_error("GridSet: malformed RLE header");
    std::vector<std::uint8_t> mask(std::size_t(g.total()), 0);
    std::uint64_t start = 0, len = 0;
    while (is >> start >> len) {
        if (start + len > mask.size()) throw config_error("GridSet: RLE run out of range");
        std::fill(mask.begin() + std::ptrdiff_t(start),
                  mask.begin() + std::ptrdiff_t(start + len), std::uint8_t(1));
    }
    return GridSet(g, std::move(mask));
}

double Reductions::power_sum(double p) const {
    for (std::size_t i = 0; i < p_list.size(); ++i)
        if (p_list[i] == p) return power_sums[i];
    throw config_error("Reductions: exponent was not retained by the pass");
}

double Reductions::norm(double p) const {
    if (std::isinf(p)) return max_abs;
    return std::pow(power_sum(p) / double(total_cells), 1.0 / p);
}

std::uint64_t Reductions::retained_cells() const {
    std::uint64_t w = 0;
    for (const TopCell& t : top) w += t.weight;
    return w;
}

double Reductions::sup_outside_top(std::uint64_t budget_cells) const {
    if (budget_cells >= total_cells)
        throw config_error("sup_outside_top: budget covers the whole grid");
    std::uint64_t consumed = 0;
    for (const TopCell& t : top) {
        if (consumed + t.weight > budget_cells) return t.abs;
        consumed += t.weight;
    }
    throw config_error("sup_outside_top: retained depth too small for budget");
}

double Reductions::norm_outside_top(double p, std::uint64_t budget_cells) const {
    if (std::isinf(p)) return sup_outside_top(budget_cells);
    double removed = 0.0;
    std::uint64_t consumed = 0;
    for (const TopCell& t : top) {
        if (consumed >= budget_cells) break;
        const std::uint64_t take = std::min<std::uint64_t>(t.weight, budget_cells - consumed);
        removed += double(take) * std::pow(t.abs, p);
        consumed += take;
    }
    if (consumed < budget_cells)
        throw config_error("norm_outside_top: retained depth too small for budget");
    const double rest = std::max(0.0, power_sum(p) - removed);
    return std::pow(rest / double(total_cells), 1.0 / p);
}

}  // namespace hcr
