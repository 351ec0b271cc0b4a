// SPDX-License-Identifier: MIT

#include "hcr/config.hpp"

#include <cstdlib>
#include <thread>

namespace hcr {

namespace {

RuntimeConfig make_initial() {
    RuntimeConfig c;
    if (const char* env = std::getenv("HCR_MEM_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) c.mem_budget_bytes = std::size_t(v);
    }
    if (const char* env = std::getenv("HCR_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) c.threads = unsigned(v);
    }
    return c;
}

}  // namespace

RuntimeConfig& runtime_config() {
    static RuntimeConfig config = make_initial();
    return config;
}

unsigned worker_threads() {
    const unsigned configured = runtime_config().threads;
    if (configured > 0) return configured;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace hcr
