/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/kernels.h>

#include <cstdlib>
#include <string_view>

namespace hbeq::simd {

const KernelSet& active_kernels() {
    static const KernelSet& chosen = [] () -> const KernelSet& {
        const char* env = std::getenv("HBEQ_SIMD");
        if (env && std::string_view(env) == "scalar") return scalar_kernels();
        if (const KernelSet* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

} // namespace hbeq::simd
