/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

// Bit-parallel kernels over truth tables.
//
// A truth table over `width` local atoms stores one bit per interpretation
// z in [0, 2^width): bit (z & 63) of word (z >> 6). Atoms 0..5 therefore
// vary inside a word with fixed lane patterns, and atoms 6.. select whole
// words, which is what makes every kernel below a straight word loop.
//
// Bits at positions >= 2^width (only possible when width < 6) are always
// zero in tables produced by the fill kernels. Query kernels rely on this.

#include <cstddef>
#include <cstdint>

namespace hbeq::simd {

/// The set of interpretations z with (z & fixed) == value. A cube whose
/// value has bits outside `fixed` is empty.
struct Cube {
    std::uint64_t fixed = 0;
    std::uint64_t value = 0;

    static constexpr Cube none() { return {0, 1}; }
    static constexpr Cube all() { return {0, 0}; }
    [[nodiscard]] constexpr bool contains(std::uint64_t z) const { return (z & fixed) == value; }
};

struct KernelSet {
    const char* name;

    /// out[z] = (z & pos) != 0 || (~z & neg) != 0, i.e. the clause whose
    /// positive literals are `pos` and negative literals are `neg`.
    void (*fill_clause)(std::uint64_t* out, std::size_t words, unsigned width, std::uint64_t pos,
                        std::uint64_t neg);
    /// inout &= clause(pos, neg).
    void (*and_clause)(std::uint64_t* inout, std::size_t words, unsigned width, std::uint64_t pos,
                       std::uint64_t neg);
    /// inout &= other.
    void (*and_table)(std::uint64_t* inout, const std::uint64_t* other, std::size_t words);
    /// Is there a z with a[z] && (b == nullptr || b[z]) && in.contains(z)
    /// && !out.contains(z)?
    bool (*any_in_cube)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words, Cube in, Cube out);
};

/// Portable reference implementation.
const KernelSet& scalar_kernels();
/// AVX2 implementation, or nullptr when not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels();
/// The kernel set used by the library. AVX2 when available unless the
/// environment variable HBEQ_SIMD is set to "scalar".
const KernelSet& active_kernels();

/// Lane pattern of local atom i < 6 inside a 64-bit word.
inline constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

/// Mask of the bits of a table's single word when width < 6.
constexpr std::uint64_t valid_bits(unsigned width) {
    return width >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << width)) - 1;
}

constexpr std::size_t table_words(unsigned width) {
    return width <= 6 ? 1 : std::size_t{1} << (width - 6);
}

namespace detail {

/// Intra-word pattern of a clause restricted to atoms 0..5.
constexpr std::uint64_t clause_low(std::uint64_t pos, std::uint64_t neg) {
    std::uint64_t w = 0;
    for (unsigned i = 0; i < 6; ++i) {
        if ((pos >> i) & 1u) w |= kLanePattern[i];
        if ((neg >> i) & 1u) w |= ~kLanePattern[i];
    }
    return w;
}

/// Intra-word pattern of a cube restricted to atoms 0..5.
constexpr std::uint64_t cube_low(Cube c) {
    std::uint64_t w = ~std::uint64_t{0};
    for (unsigned i = 0; i < 6; ++i) {
        if ((c.fixed >> i) & 1u) w &= ((c.value >> i) & 1u) ? kLanePattern[i] : ~kLanePattern[i];
    }
    // value bits outside fixed make the cube empty
    return (c.value & ~c.fixed) != 0 ? 0 : w;
}

} // namespace detail

} // namespace hbeq::simd
