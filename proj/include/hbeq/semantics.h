/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/model_table.h>
#include <hbeq/syntax.h>

#include <span>
#include <unordered_map>
#include <vector>

namespace hbeq {

/// A set of interpretations kept in canonical (numeric) order.
class InterpretationSet {
public:
    InterpretationSet() = default;
    explicit InterpretationSet(std::vector<Interpretation> members);
    /// Members of `t` expanded through `frame`.
    InterpretationSet(const ModelTable& t, const Frame& frame);

    [[nodiscard]] std::span<const Interpretation> members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] bool contains(Interpretation i) const;

    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    friend bool operator==(const InterpretationSet&, const InterpretationSet&) = default;

private:
    std::vector<Interpretation> members_;
};

/// AS(P). Always an antichain under set inclusion.
using AnswerSetFamily = InterpretationSet;

[[nodiscard]] bool satisfies(Interpretation i, const Rule& r);
[[nodiscard]] bool satisfies(Interpretation i, const Program& p);

/// The Gelfond-Lifschitz reduct P^Y.
[[nodiscard]] Program reduct(const Program& p, Interpretation y);

/// Models of `p` among the subsets of `universe`.
[[nodiscard]] InterpretationSet models(const Program& p, AtomSet universe);
[[nodiscard]] AnswerSetFamily answer_sets(const Program& p, AtomSet universe);
[[nodiscard]] bool ordinary_equivalent(const Program& p, const Program& q, AtomSet universe);

/// Replaces a context program `r` by the positive program r^y, which adds
/// no head or body atoms and preserves whether y is an answer set of p u r.
[[nodiscard]] Program simplify_context(const Program& p, const Program& r, Interpretation y);

/// Truth-table view of one program over a fixed universe: its models and,
/// per interpretation y, the models of the reduct P^y. Everything is
/// expressed in the local coordinates of frame().
///
/// Reduct tables are built on demand and cached by y's intersection with
/// the negative bodies; a ModelIndex is therefore not safe for concurrent
/// use, though distinct instances are independent.
class ModelIndex {
public:
    /// Throws LimitError if the universe is too wide. Atoms of `p` outside
    /// `universe` are not allowed.
    ModelIndex(const Program& p, AtomSet universe);

    [[nodiscard]] const Frame& frame() const { return frame_; }
    [[nodiscard]] unsigned width() const { return frame_.width(); }
    [[nodiscard]] std::uint64_t full() const { return frame_.full(); }

    /// Models of P (local).
    [[nodiscard]] const ModelTable& models() const { return models_; }
    [[nodiscard]] bool is_model(std::uint64_t y) const { return models_.test(y); }
    /// Models of P^y (local).
    [[nodiscard]] const ModelTable& reduct_models(std::uint64_t y) const;

    /// Answer sets of P as a table over interpretations.
    [[nodiscard]] ModelTable answer_sets() const;
    /// Answer sets of P u R for a positive program R whose models (over the
    /// same frame) are `context_models`.
    [[nodiscard]] ModelTable answer_sets_with(const ModelTable& context_models) const;

    /// The positive part of each rule in local coordinates.
    struct LocalRule {
        std::uint64_t head;
        std::uint64_t pos;
        std::uint64_t neg;
    };
    [[nodiscard]] std::span<const LocalRule> rules() const { return rules_; }

private:
    Frame                                          frame_;
    std::vector<LocalRule>                         rules_;
    std::uint64_t                                  neg_mask_ = 0;
    ModelTable                                     models_;
    mutable std::unordered_map<std::uint64_t, ModelTable> reducts_;
};

namespace cubes {

/// Subsets of y, y included.
constexpr simd::Cube below(std::uint64_t y, std::uint64_t full) { return {full & ~y, 0}; }
constexpr simd::Cube exactly(std::uint64_t z, std::uint64_t full) { return {full, z}; }
/// Subsets of y that agree with y on h.
constexpr simd::Cube same_on(std::uint64_t y, std::uint64_t h, std::uint64_t full) {
    return {(full & ~y) | h, y & h};
}
/// Subsets z of y with x <= z under (h, b): x|h within z|h and z|b within
/// x|b. Requires x within y.
constexpr simd::Cube preceq_up(std::uint64_t x, std::uint64_t y, std::uint64_t h, std::uint64_t b,
                               std::uint64_t full) {
    const std::uint64_t fixed = (h & b) | (h & x) | (b & ~x) | (full & ~y);
    return {fixed, x & fixed};
}

} // namespace cubes

} // namespace hbeq
