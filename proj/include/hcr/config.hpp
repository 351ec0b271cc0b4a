// SPDX-License-Identifier: MIT
//
// Runtime limits (memory budget, worker threads, sparse support cap) and the
// error taxonomy shared by the whole library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcr {

/// Invalid arguments or violated preconditions. CLI exit code 2.
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Memory budget or support cap exceeded. CLI exit code 4.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal structural assertion failed (signals a construction bug,
/// e.g. spectral orthogonality violated while assembling a Riesz product).
class construction_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct RuntimeConfig {
    // Largest dense sample array evaluate_on_grid may materialize.
    std::size_t mem_budget_bytes = std::size_t{4} << 30;
    // Cap on the number of stored coefficients a spectral product may create.
    std::size_t support_cap = 120'000'000;
    // Worker threads for grid sweeps. Partitioning is fixed, so results do
    // not depend on this value.
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Mutable process-wide configuration. Initialized from HCR_MEM_BUDGET and
/// HCR_THREADS on first access.
RuntimeConfig& runtime_config();

unsigned worker_threads();

inline constexpr int kMaxDim = 3;
inline constexpr int kMaxHyperbolicN = 1 << 16;
inline constexpr int kMaxLayerIndex = 20;
inline constexpr double kCoeffPruneThreshold = 1e-15;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace hcr
