/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/kernels.h>

namespace hbeq::simd {
namespace {

constexpr std::uint64_t kHigh = ~std::uint64_t{63};

inline std::uint64_t clause_word(std::size_t w, std::uint64_t low, std::uint64_t pos_hi, std::uint64_t neg_hi) {
    const std::uint64_t z = static_cast<std::uint64_t>(w) << 6;
    return ((z & pos_hi) != 0 || (~z & neg_hi) != 0) ? ~std::uint64_t{0} : low;
}

inline std::uint64_t cube_word(std::size_t w, std::uint64_t low, Cube c) {
    const std::uint64_t z = static_cast<std::uint64_t>(w) << 6;
    return (((z ^ c.value) & c.fixed & kHigh) == 0) ? low : 0;
}

void fill_clause(std::uint64_t* out, std::size_t words, unsigned width, std::uint64_t pos, std::uint64_t neg) {
    const std::uint64_t low = detail::clause_low(pos, neg);
    for (std::size_t w = 0; w < words; ++w) out[w] = clause_word(w, low, pos & kHigh, neg & kHigh);
    if (width < 6) out[0] &= valid_bits(width);
}

void and_clause(std::uint64_t* inout, std::size_t words, unsigned, std::uint64_t pos, std::uint64_t neg) {
    const std::uint64_t low = detail::clause_low(pos, neg);
    for (std::size_t w = 0; w < words; ++w) inout[w] &= clause_word(w, low, pos & kHigh, neg & kHigh);
}

void and_table(std::uint64_t* inout, const std::uint64_t* other, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) inout[w] &= other[w];
}

bool any_in_cube(const std::uint64_t* a, const std::uint64_t* b, std::size_t words, Cube in, Cube out) {
    const std::uint64_t in_low  = detail::cube_low(in);
    const std::uint64_t out_low = detail::cube_low(out);
    if (in_low == 0) return false;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t v = a[w] & cube_word(w, in_low, in) & ~cube_word(w, out_low, out);
        if (b) v &= b[w];
        if (v != 0) return true;
    }
    return false;
}

} // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet k{"scalar", fill_clause, and_clause, and_table, any_in_cube};
    return k;
}

} // namespace hbeq::simd
