// Copyright 2026 The qcpu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runtime kernel selection.

#include "qcpu/kernels.hpp"

#include "qcpu/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qcpu::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QCPU_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops *pick_auto() {
    return avx2_available() ? &avx2_ops() : &scalar_ops();
}

std::atomic<const Ops *> g_active{nullptr};

const Ops *init_from_env() {
    if (const char *env = std::getenv("QCPU_KERNELS")) {
        const std::string_view v{env};
        if (v == "scalar")
            return &scalar_ops();
        if (v == "avx2" && avx2_available())
            return &avx2_ops();
        // Unknown or unavailable values fall back to auto; the CLI has no
        // business crashing over a stale environment variable.
    }
    return pick_auto();
}

} // namespace

bool avx2_available() {
    static const bool available = cpu_has_avx2();
    return available;
}

const Ops &active() {
    const Ops *ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = init_from_env();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void select(std::string_view which) {
    if (which == "auto") {
        g_active.store(pick_auto(), std::memory_order_release);
    } else if (which == "scalar") {
        g_active.store(&scalar_ops(), std::memory_order_release);
    } else if (which == "avx2") {
        if (!avx2_available())
            throw ConfigError("avx2 kernels not available on this host");
        g_active.store(&avx2_ops(), std::memory_order_release);
    } else {
        throw ConfigError("unknown kernel set: " + std::string(which));
    }
}

} // namespace qcpu::kernels
