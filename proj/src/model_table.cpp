/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/error.h>
#include <hbeq/model_table.h>

#include <algorithm>
#include <string>

namespace hbeq {

Frame::Frame(AtomSet universe) : universe_(universe), width_(static_cast<unsigned>(universe.size())) {
    if (width_ > kMaxTableWidth) {
        throw LimitError("universe of " + std::to_string(width_) + " atoms exceeds the limit of " +
                         std::to_string(kMaxTableWidth) + " for exhaustive enumeration");
    }
    unsigned i = 0;
    for (AtomId a : universe) atoms_[i++] = a;
}

std::uint64_t Frame::compress(AtomSet s) const {
    std::uint64_t local = 0;
    for (unsigned i = 0; i < width_; ++i) {
        if (s.contains(atoms_[i])) local |= std::uint64_t{1} << i;
    }
    return local;
}

AtomSet Frame::expand(std::uint64_t local) const {
    AtomSet s;
    for (; local != 0; local &= local - 1) s.insert(atoms_[std::countr_zero(local)]);
    return s;
}

ModelTable::ModelTable(unsigned width, bool filled) : width_(width), words_(simd::table_words(width), 0) {
    if (filled) {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        words_[0] &= simd::valid_bits(width);
    }
}

bool ModelTable::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ModelTable::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

ModelTable& ModelTable::operator&=(const ModelTable& o) {
    simd::active_kernels().and_table(words_.data(), o.words_.data(), words_.size());
    return *this;
}

ModelTable clause_table(unsigned width, std::uint64_t pos, std::uint64_t neg) {
    ModelTable t(width);
    simd::active_kernels().fill_clause(t.data(), t.words().size(), width, pos, neg);
    return t;
}

} // namespace hbeq
