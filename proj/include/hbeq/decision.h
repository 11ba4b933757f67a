/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/characterization.h>

#include <optional>
#include <string_view>
#include <vector>

namespace hbeq {

/// Which containment of a pair (P, Q) a witness refutes.
enum class Containment {
    left_in_right, ///< P contained in Q
    right_in_left, ///< Q contained in P
};

/// A pair (X, Y) refuting a containment: Y is an H-total model of the
/// first program and, if Y satisfies the second, X is a proper subset of Y
/// satisfying its reduct with no model of the first reduct at or above X
/// (under the alphabet order) strictly below Y.
struct Witness {
    Interpretation x;
    Interpretation y;
    Containment    direction = Containment::left_in_right;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Which side of the comparison has `distinguishing` as an answer set.
enum class Side { left, right };

/// A unary context R in C<H,B> separating the programs at Y.
struct Counterexample {
    Program        context;
    Interpretation distinguishing;
    Side           side = Side::left;
};

enum class Method { sigma_comparison, witness_search, oracle, positive_fast_path, reduction };

[[nodiscard]] std::string_view method_name(Method m);

struct Verdict {
    /// Equivalence, or containment for decide_containment.
    bool                          equivalent = true;
    std::optional<Witness>        witness;
    std::optional<Counterexample> counterexample;
    Method                        method = Method::sigma_comparison;
};

/// Default bound on the number of enumerated contexts or alphabet pairs.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// atoms(p) u atoms(q), the universe used when none is given.
[[nodiscard]] AtomSet default_universe(const Program& p, const Program& q);

/// Direct test of the witness conditions against p contained in q.
[[nodiscard]] bool is_witness(const Program& p, const Program& q, const AlphabetPair& ab, Interpretation x,
                              Interpretation y);

/// First witness against p contained in q: y ascending, then x ascending.
/// When y is not a model of q, (y, y) is returned: it satisfies the
/// witness conditions and, unlike smaller x, always yields a separating
/// unary context.
[[nodiscard]] std::optional<Witness> find_witness(const Program& p, const Program& q, const AlphabetPair& ab,
                                                  AtomSet universe);
/// Same on prepared indices over one frame; the result is in global atoms.
[[nodiscard]] std::optional<Witness> find_witness(const ModelIndex& p, const ModelIndex& q, const AlphabetPair& ab);

/// R = X|H u { a <- b | a in (Y\X)|H, b in (Y\X)|B }.
[[nodiscard]] Program unary_context(const Witness& w, const AlphabetPair& ab);

/// Builds the unary context for `w` and checks by answer-set computation
/// that it separates p and q at w.y. Throws InvalidWitnessError otherwise.
[[nodiscard]] Counterexample witness_to_counterexample(const Program& p, const Program& q, const Witness& w,
                                                       const AlphabetPair& ab, AtomSet universe);

/// Is p contained in q relative to ab? Witness search.
[[nodiscard]] Verdict decide_containment(const Program& p, const Program& q, const AlphabetPair& ab,
                                         AtomSet universe);
[[nodiscard]] Verdict decide_containment(const Program& p, const Program& q, const AlphabetPair& ab);

/// Compares <H,B>-models; on a difference, extracts a witness from one of
/// the two containments and synthesizes a validated counterexample.
/// Throws InconsistencyError if the models differ but neither containment
/// has a witness.
[[nodiscard]] Verdict decide_equivalence(const Program& p, const Program& q, const AlphabetPair& ab,
                                         AtomSet universe);
[[nodiscard]] Verdict decide_equivalence(const Program& p, const Program& q, const AlphabetPair& ab);
/// Same on prepared indices over one frame.
[[nodiscard]] Verdict decide_equivalence(const Program& p, const Program& q, const ModelIndex& ip,
                                         const ModelIndex& iq, const AlphabetPair& ab);

/// The unary programs of C<H,B>: every subset of the items
///     a.        for a in H, then
///     a :- b.   for a in H, b in B (a :- a included),
/// in id order. Context number k contains item i iff bit i of k is set.
class UnaryContextSpace {
public:
    UnaryContextSpace(const AlphabetPair& ab, const Frame& frame);

    [[nodiscard]] std::size_t item_count() const { return items_.size(); }
    /// Number of contexts, or throws BudgetExceeded if it exceeds `budget`.
    [[nodiscard]] std::uint64_t checked_size(std::uint64_t budget) const;
    [[nodiscard]] Program context(std::uint64_t k) const;

    /// Calls f(k, models of context k) for k = 0, 1, ... in order; stops
    /// early when f returns false.
    template <class F>
    void for_each(F&& f) const {
        std::vector<ModelTable> stack(items_.size() + 1, ModelTable(frame_.width(), true));
        walk(stack, items_.size(), 0, f);
    }

private:
    template <class F>
    bool walk(std::vector<ModelTable>& stack, std::size_t level, std::uint64_t k, F& f) const {
        if (level == 0) return f(k, stack[0]);
        // leaves come out in increasing k: the top remaining item is the
        // most significant bit
        stack[level - 1] = stack[level];
        if (!walk(stack, level - 1, k, f)) return false;
        stack[level - 1] = stack[level];
        stack[level - 1] &= tables_[level - 1];
        return walk(stack, level - 1, k | (std::uint64_t{1} << (level - 1)), f);
    }

    Frame                   frame_;
    std::vector<Rule>       items_;
    std::vector<ModelTable> tables_;
};

/// Brute force over every unary context of C<H,B> (complete because
/// non-equivalence always has a unary counterexample). Throws BudgetExceeded when there are more
/// than `budget` contexts.
[[nodiscard]] Verdict oracle_equivalence(const Program& p, const Program& q, const AlphabetPair& ab,
                                         AtomSet universe, std::uint64_t budget = kDefaultBudget);

/// Concatenated answer-set tables of p u R for every context R of the
/// space, in order. Two programs over the same frame are equivalent
/// relative to the space's alphabet iff their profiles are equal.
[[nodiscard]] std::vector<std::uint64_t> oracle_profile(const ModelIndex& idx, const UnaryContextSpace& space);

/// Positive programs are <H,B>-equivalent iff they have the same H-total
/// models, for any B. Throws NotPositiveError otherwise. Counterexamples
/// consist of facts only, so they lie in every C<H,B>.
[[nodiscard]] Verdict decide_equivalence_positive(const Program& p, const Program& q, AtomSet h,
                                                  AtomSet universe);

struct LatticeEntry {
    AlphabetPair alphabet;
    bool         equivalent;
};

struct LatticeReport {
    AtomSet                   universe;
    /// Every (H, B) over the universe, ordered by H then B.
    std::vector<LatticeEntry> entries;
    bool                      ordinary; ///< (∅, U)
    bool                      uniform;  ///< (U, ∅)
    bool                      strong;   ///< (U, U)

    [[nodiscard]] bool at(const AlphabetPair& ab) const;
};

/// Verdicts for all 4^|U| alphabet pairs. Throws BudgetExceeded when that
/// exceeds `budget`.
[[nodiscard]] LatticeReport equivalence_lattice(const Program& p, const Program& q, AtomSet universe,
                                                std::uint64_t budget = kDefaultBudget);

} // namespace hbeq
