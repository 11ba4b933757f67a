/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/semantics.h>

#include <vector>

namespace hbeq {

/// An element (X, Y) of a characterization, X a subset of Y.
struct ModelPair {
    Interpretation x;
    Interpretation y;

    [[nodiscard]] bool total() const { return x == y; }

    friend bool operator==(const ModelPair&, const ModelPair&) = default;
    /// Canonical order: by Y, then by X.
    friend auto operator<=>(const ModelPair& a, const ModelPair& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

/// A set of model pairs computed for one program, alphabet pair and
/// universe. Pairs are kept sorted and unique, so equality is exact.
class Characterization {
public:
    Characterization() = default;
    Characterization(AlphabetPair alphabet, AtomSet universe, std::vector<ModelPair> pairs);

    [[nodiscard]] const AlphabetPair& alphabet() const { return alphabet_; }
    [[nodiscard]] AtomSet universe() const { return universe_; }
    [[nodiscard]] const std::vector<ModelPair>& pairs() const& { return pairs_; }
    /// On a temporary, hands the pairs over so range-for stays safe.
    [[nodiscard]] std::vector<ModelPair> pairs() && { return std::move(pairs_); }
    [[nodiscard]] std::size_t size() const { return pairs_.size(); }
    [[nodiscard]] bool contains(const ModelPair& m) const;
    [[nodiscard]] bool contains(Interpretation x, Interpretation y) const { return contains(ModelPair{x, y}); }
    /// The Y of every total pair.
    [[nodiscard]] InterpretationSet totals() const;

    friend bool operator==(const Characterization&, const Characterization&) = default;

private:
    AlphabetPair           alphabet_;
    AtomSet                universe_;
    std::vector<ModelPair> pairs_;
};

/// V <=_H^B Z: V|H within Z|H and Z|B within V|B.
[[nodiscard]] bool preceq(Interpretation v, Interpretation z, const AlphabetPair& ab);
/// preceq(v, z) and v, z differ on H u B.
[[nodiscard]] bool prec_strict(Interpretation v, Interpretation z, const AlphabetPair& ab);

/// y is a model of p and every proper subset of y satisfying p^y loses an
/// atom of h.
[[nodiscard]] bool is_h_total(const Program& p, Interpretation y, AtomSet h);

/// x satisfies p^y and no x' with x < x' (strictly, under ab) and x' a
/// proper subset of y satisfies p^y.
[[nodiscard]] bool is_preceq_maximal(const Program& p, Interpretation x, Interpretation y, const AlphabetPair& ab);

/// The <H,B>-models of p over `universe`; ab is intersected with the
/// universe. Throws LimitError for universes wider than kMaxTableWidth.
[[nodiscard]] Characterization hb_models(const Program& p, const AlphabetPair& ab, AtomSet universe);
[[nodiscard]] Characterization hb_models(const ModelIndex& idx, const AlphabetPair& ab);

/// Local H-total test on a prepared index: no proper subset z of y in
/// P^y's models agrees with y on h.
[[nodiscard]] bool is_h_total_local(const ModelIndex& idx, std::uint64_t y, std::uint64_t h);

// Closed forms for special alphabets. Each follows its own textbook
// definition rather than calling hb_models.

/// SE-models: Y |= P and X |= P^Y.
[[nodiscard]] Characterization se_models(const Program& p, AtomSet universe);
/// UE-models: SE-models whose X is maximal among proper subsets of Y.
[[nodiscard]] Characterization ue_models(const Program& p, AtomSet universe);
/// A-SE-models.
[[nodiscard]] Characterization rel_se_models(const Program& p, AtomSet a, AtomSet universe);
/// A-UE-models.
[[nodiscard]] Characterization rel_ue_models(const Program& p, AtomSet a, AtomSet universe);

/// Answer sets read off the total <{}, U>-models.
[[nodiscard]] AnswerSetFamily answer_sets_via_characterization(const Program& p, AtomSet universe);

} // namespace hbeq
