/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace hbeq {

using AtomId = std::uint32_t;

/// Upper bound on the number of atoms a single workspace can intern.
inline constexpr std::size_t kMaxAtoms = 64;

/// A set of atoms drawn from one workspace, stored as a 64-bit mask indexed
/// by atom id. Interpretations, alphabets and rule parts are all AtomSets.
class AtomSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type        = AtomId;
        using difference_type   = std::ptrdiff_t;
        using pointer           = const AtomId*;
        using reference         = AtomId;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr AtomId operator*() const { return static_cast<AtomId>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}
    constexpr AtomSet(std::initializer_list<AtomId> atoms) {
        for (AtomId a : atoms) insert(a);
    }

    static constexpr AtomSet single(AtomId a) { return AtomSet(std::uint64_t{1} << a); }
    /// The atoms with ids 0..n-1.
    static constexpr AtomSet first(std::size_t n) {
        return AtomSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool contains(AtomId a) const { return a < 64 && ((bits_ >> a) & 1u) != 0; }

    constexpr AtomSet& insert(AtomId a) {
        bits_ |= std::uint64_t{1} << a;
        return *this;
    }
    constexpr AtomSet& erase(AtomId a) {
        bits_ &= ~(std::uint64_t{1} << a);
        return *this;
    }

    [[nodiscard]] constexpr bool subset_of(AtomSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr bool proper_subset_of(AtomSet o) const { return subset_of(o) && bits_ != o.bits_; }
    [[nodiscard]] constexpr bool intersects(AtomSet o) const { return (bits_ & o.bits_) != 0; }

    /// Restriction Y|_A.
    [[nodiscard]] constexpr AtomSet restrict_to(AtomSet a) const { return AtomSet(bits_ & a.bits_); }

    constexpr AtomSet& operator|=(AtomSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr AtomSet& operator&=(AtomSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr AtomSet& operator-=(AtomSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return a |= b; }
    friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return a &= b; }
    friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return a -= b; }

    friend constexpr bool operator==(AtomSet, AtomSet) = default;
    /// Numeric order of the underlying mask; the canonical order for output.
    friend constexpr auto operator<=>(AtomSet a, AtomSet b) { return a.bits_ <=> b.bits_; }

    [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
    [[nodiscard]] constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

using Interpretation = AtomSet;

} // namespace hbeq
