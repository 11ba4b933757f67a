/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/error.h>
#include <hbeq/semantics.h>

#include <algorithm>

namespace hbeq {

InterpretationSet::InterpretationSet(std::vector<Interpretation> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

InterpretationSet::InterpretationSet(const ModelTable& t, const Frame& frame) {
    members_.reserve(t.count());
    t.for_each([&](std::uint64_t z) { members_.push_back(frame.expand(z)); });
}

bool InterpretationSet::contains(Interpretation i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

bool satisfies(Interpretation i, const Rule& r) {
    return !r.pos.subset_of(i) || r.neg.intersects(i) || r.head.intersects(i);
}

bool satisfies(Interpretation i, const Program& p) {
    return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return satisfies(i, r); });
}

Program reduct(const Program& p, Interpretation y) {
    Program out;
    out.extend_universe(p.universe());
    for (const Rule& r : p.rules()) {
        if (r.neg.intersects(y)) continue;
        out.add(Rule{r.head, r.pos, {}});
    }
    return out;
}

InterpretationSet models(const Program& p, AtomSet universe) {
    ModelIndex idx(p, universe);
    return InterpretationSet(idx.models(), idx.frame());
}

AnswerSetFamily answer_sets(const Program& p, AtomSet universe) {
    ModelIndex idx(p, universe);
    return AnswerSetFamily(idx.answer_sets(), idx.frame());
}

bool ordinary_equivalent(const Program& p, const Program& q, AtomSet universe) {
    return ModelIndex(p, universe).answer_sets() == ModelIndex(q, universe).answer_sets();
}

Program simplify_context(const Program&, const Program& r, Interpretation y) { return reduct(r, y); }

// ModelIndex

ModelIndex::ModelIndex(const Program& p, AtomSet universe) : frame_(universe), models_(frame_.width(), true) {
    if (!p.atoms().subset_of(universe)) throw Error("program mentions atoms outside the universe");
    rules_.reserve(p.size());
    const auto& k = simd::active_kernels();
    for (const Rule& r : p.rules()) {
        LocalRule lr{frame_.compress(r.head), frame_.compress(r.pos), frame_.compress(r.neg)};
        rules_.push_back(lr);
        neg_mask_ |= lr.neg;
        // classical satisfaction: H(r) or B-(r) true, or some B+(r) false
        k.and_clause(models_.data(), models_.words().size(), width(), lr.head | lr.neg, lr.pos);
    }
}

const ModelTable& ModelIndex::reduct_models(std::uint64_t y) const {
    const std::uint64_t key = y & neg_mask_;
    if (auto it = reducts_.find(key); it != reducts_.end()) return it->second;
    ModelTable t(width(), true);
    const auto& k = simd::active_kernels();
    for (const LocalRule& r : rules_) {
        if ((r.neg & key) != 0) continue;
        k.and_clause(t.data(), t.words().size(), width(), r.head, r.pos);
    }
    return reducts_.emplace(key, std::move(t)).first->second;
}

ModelTable ModelIndex::answer_sets() const {
    ModelTable out(width());
    const auto& k = simd::active_kernels();
    models_.for_each([&](std::uint64_t y) {
        const ModelTable& t = reduct_models(y);
        if (!k.any_in_cube(t.data(), nullptr, t.words().size(), cubes::below(y, full()), cubes::exactly(y, full())))
            out.set(y);
    });
    return out;
}

ModelTable ModelIndex::answer_sets_with(const ModelTable& context_models) const {
    ModelTable out(width());
    const auto& k = simd::active_kernels();
    const std::size_t words = models_.words().size();
    for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t bits = models_.data()[w] & context_models.data()[w]; bits != 0; bits &= bits - 1) {
            const std::uint64_t y = (static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(std::countr_zero(bits));
            const ModelTable& t   = reduct_models(y);
            // (P u R)^y = P^y u R since R is positive
            if (!k.any_in_cube(t.data(), context_models.data(), words, cubes::below(y, full()),
                               cubes::exactly(y, full())))
                out.set(y);
        }
    }
    return out;
}

} // namespace hbeq
