/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/atom_set.h>
#include <hbeq/kernels.h>

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hbeq {

/// Largest universe the exhaustive machinery accepts (2^20 interpretations).
inline constexpr unsigned kMaxTableWidth = 20;

/// Maps the atoms of a universe onto dense local positions 0..width-1,
/// preserving id order. Local masks compare numerically in the same order
/// as the global AtomSets they stand for.
class Frame {
public:
    Frame() = default;
    /// Throws LimitError when the universe exceeds kMaxTableWidth atoms.
    explicit Frame(AtomSet universe);

    [[nodiscard]] AtomSet universe() const { return universe_; }
    [[nodiscard]] unsigned width() const { return width_; }
    [[nodiscard]] std::uint64_t full() const { return width_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1; }
    [[nodiscard]] std::uint64_t interpretation_count() const { return std::uint64_t{1} << width_; }

    /// Drops atoms outside the universe.
    [[nodiscard]] std::uint64_t compress(AtomSet s) const;
    [[nodiscard]] AtomSet expand(std::uint64_t local) const;

private:
    AtomSet  universe_;
    unsigned width_ = 0;
    AtomId   atoms_[kMaxTableWidth] = {};
};

/// A set of interpretations over a frame, one bit per interpretation.
class ModelTable {
public:
    ModelTable() : ModelTable(0) {}
    explicit ModelTable(unsigned width, bool filled = false);

    [[nodiscard]] unsigned width() const { return width_; }
    [[nodiscard]] std::span<std::uint64_t> words() { return words_; }
    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }
    [[nodiscard]] std::uint64_t* data() { return words_.data(); }
    [[nodiscard]] const std::uint64_t* data() const { return words_.data(); }

    [[nodiscard]] bool test(std::uint64_t z) const { return ((words_[z >> 6] >> (z & 63)) & 1u) != 0; }
    void set(std::uint64_t z) { words_[z >> 6] |= std::uint64_t{1} << (z & 63); }
    void reset(std::uint64_t z) { words_[z >> 6] &= ~(std::uint64_t{1} << (z & 63)); }

    [[nodiscard]] bool empty() const;
    [[nodiscard]] std::size_t count() const;

    /// Calls f(z) for every member in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                f((static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(std::countr_zero(bits)));
            }
        }
    }

    ModelTable& operator&=(const ModelTable& o);
    friend bool operator==(const ModelTable&, const ModelTable&) = default;

private:
    unsigned                   width_;
    std::vector<std::uint64_t> words_;
};

/// Models of the clause with positive literals `pos` and negative literals
/// `neg` (local masks).
[[nodiscard]] ModelTable clause_table(unsigned width, std::uint64_t pos, std::uint64_t neg);

/// Ascending enumeration of the subsets of `mask`, including 0 and `mask`.
template <class F>
void for_each_subset(std::uint64_t mask, F&& f) {
    std::uint64_t s = 0;
    do {
        f(s);
        s = (s - mask) & mask;
    } while (s != 0);
}

} // namespace hbeq
