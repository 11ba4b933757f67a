/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "example1.h"
#include "naive.h"
#include "pool.h"

#include <hbeq/decision.h>
#include <hbeq/error.h>

#include <doctest.h>

#include <algorithm>

using namespace hbeq;
using namespace hbeq::testing;

namespace {

/// AS(p u R) within AS(q u R) for every unary R of C<H,B>.
bool oracle_contained(const Program& p, const Program& q, const AlphabetPair& ab, AtomSet u) {
    const ModelIndex ip(p, u), iq(q, u);
    const UnaryContextSpace space(ab, ip.frame());
    bool contained = true;
    space.for_each([&](std::uint64_t, const ModelTable& ctx) {
        const ModelTable ap = ip.answer_sets_with(ctx);
        const ModelTable aq = iq.answer_sets_with(ctx);
        for (std::size_t w = 0; w < ap.words().size(); ++w)
            if ((ap.data()[w] & ~aq.data()[w]) != 0) contained = false;
        return contained;
    });
    return contained;
}

bool separates(const Program& p, const Program& q, const Counterexample& c) {
    const bool left  = naive_is_answer_set(p | c.context, c.distinguishing.bits());
    const bool right = naive_is_answer_set(q | c.context, c.distinguishing.bits());
    return left != right && left == (c.side == Side::left);
}

} // namespace

TEST_SUITE("decision") {

TEST_CASE("witnesses of the running example") {
    Example1 ex;
    const AlphabetPair ab1{ex.set({ex.b}), ex.u};
    auto w = find_witness(ex.p, ex.q, ab1, ex.u);
    REQUIRE(w);
    CHECK(w->x == AtomSet{});
    CHECK(w->y == ex.u);
    CHECK(is_witness(ex.p, ex.q, ab1, w->x, w->y));

    const AlphabetPair ab2{ex.u, ex.set({ex.a})};
    w = find_witness(ex.p, ex.q, ab2, ex.u);
    REQUIRE(w);
    CHECK(w->x == AtomSet{});
    CHECK(w->y == ex.u);

    for (const AlphabetPair& ab : all_alphabets(ex.u)) CHECK_FALSE(find_witness(ex.p, ex.p, ab, ex.u));
}

TEST_CASE("unary contexts built from witnesses") {
    Example1 ex;
    const Witness w{AtomSet{}, ex.u};
    CHECK(unary_context(w, {ex.set({ex.b}), ex.u}).same_rules(ex.parse("b :- a. b :- b.")));
    CHECK(unary_context(w, {ex.u, ex.set({ex.a})}).same_rules(ex.parse("a :- a. b :- a.")));
    CHECK(unary_context({ex.set({ex.a}), ex.u}, {ex.u, {}}).same_rules(ex.parse("a.")));

    const Counterexample c = witness_to_counterexample(ex.p, ex.q, w, {ex.set({ex.b}), ex.u}, ex.u);
    CHECK(answer_sets(ex.p | c.context, ex.u) == InterpretationSet({ex.u}));
    CHECK(answer_sets(ex.q | c.context, ex.u).empty());
    CHECK(c.side == Side::left);

    // a pair that is not a witness is caught by validation
    CHECK_THROWS_AS((void)witness_to_counterexample(ex.p, ex.p, w, {ex.set({ex.b}), ex.u}, ex.u),
                    InvalidWitnessError);
}

TEST_CASE("a witness whose Y falsifies Q is answered with X = Y") {
    // Any X works for the witness definition here, but the unary program
    // built from X = {} does not separate: it is empty and {a} is not an
    // answer set of the empty program.
    Workspace ws;
    const Program p;
    const Program q = parse_program(":- a.", ws);
    const AtomSet a{*ws.find("a")};
    const AlphabetPair ab{a, {}};
    CHECK(is_witness(p, q, ab, AtomSet{}, a));
    CHECK_FALSE(answer_sets(p | unary_context({AtomSet{}, a}, ab), a).contains(a));

    const auto w = find_witness(p, q, ab, a);
    REQUIRE(w);
    CHECK(w->x == a);
    CHECK(w->y == a);
    const Counterexample c = witness_to_counterexample(p, q, *w, ab, a);
    CHECK(c.context.same_rules(parse_program("a.", ws)));
}

TEST_CASE("containment") {
    Example1 ex;
    const Verdict v = decide_containment(ex.p, ex.q, {ex.set({ex.b}), ex.u});
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample);
    CHECK(separates(ex.p, ex.q, *v.counterexample));
    CHECK(decide_containment(ex.q, ex.p, {ex.u, ex.set({ex.b})}).equivalent);
    CHECK(decide_containment(ex.p, ex.p, {ex.u, ex.u}).equivalent);
}

TEST_CASE("equivalence on the running example") {
    Example1 ex;
    const AtomSet a = ex.set({ex.a}), b = ex.set({ex.b});
    CHECK(decide_equivalence(ex.p, ex.q, {ex.u, b}).equivalent);
    CHECK(decide_equivalence(ex.p, ex.q, {a, ex.u}).equivalent);
    CHECK(decide_equivalence(ex.p, ex.q, {ex.u, {}}).equivalent);
    const Verdict v = decide_equivalence(ex.p, ex.q, {b, ex.u});
    CHECK_FALSE(v.equivalent);
    CHECK(v.method == Method::sigma_comparison);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->context.is_unary());
    CHECK(in_class(v.counterexample->context, {b, ex.u}));
    CHECK(separates(ex.p, ex.q, *v.counterexample));
    CHECK_FALSE(decide_equivalence(ex.p, ex.q, {ex.u, ex.u}).equivalent);
    CHECK_FALSE(decide_equivalence(ex.p, ex.q, {ex.u, a}).equivalent);
}

TEST_CASE("the oracle") {
    Example1 ex;
    CHECK(oracle_equivalence(ex.p, ex.q, {ex.u, {}}, ex.u).equivalent);
    const Verdict v = oracle_equivalence(ex.p, ex.q, {ex.u, ex.u}, ex.u);
    CHECK_FALSE(v.equivalent);
    CHECK(v.method == Method::oracle);
    REQUIRE(v.counterexample);
    CHECK(separates(ex.p, ex.q, *v.counterexample));
    CHECK(oracle_equivalence(ex.q, ex.q, {ex.u, ex.u}, ex.u).equivalent);
    CHECK_THROWS_AS((void)oracle_equivalence(ex.p, ex.q, {ex.u, ex.u}, ex.u, 16), BudgetExceeded);
}

TEST_CASE("the unary context space enumerates in counter order") {
    Example1 ex;
    const Frame frame(ex.u);
    const UnaryContextSpace space({ex.u, ex.set({ex.b})}, frame);
    CHECK(space.item_count() == 4);
    CHECK(space.checked_size(kDefaultBudget) == 16);
    std::uint64_t expect = 0;
    space.for_each([&](std::uint64_t k, const ModelTable& t) {
        CHECK(k == expect++);
        const ModelIndex idx(space.context(k), ex.u);
        CHECK(t == idx.models());
        return true;
    });
    CHECK(expect == 16);
    // a :- a. is part of the space
    const UnaryContextSpace loops({ex.set({ex.a}), ex.set({ex.a})}, frame);
    CHECK(loops.context(2).same_rules(ex.parse("a :- a.")));
}

TEST_CASE("positive fast path") {
    Example1 ex;
    const Program other = ex.parse("a. a :- b.");
    CHECK(decide_equivalence_positive(ex.p, other, ex.u, ex.u).equivalent);
    CHECK(decide_equivalence_positive(ex.p, ex.p, ex.u, ex.u).equivalent);
    CHECK_THROWS_AS((void)decide_equivalence_positive(ex.p, ex.q, ex.u, ex.u), NotPositiveError);
    const Verdict v = decide_equivalence_positive(ex.p, ex.parse("a | b."), ex.u, ex.u);
    CHECK_FALSE(v.equivalent);
    CHECK(v.method == Method::positive_fast_path);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->context.heads().subset_of(ex.u));
    CHECK(v.counterexample->context.bodies().empty());
}

TEST_CASE("lattice of the running example") {
    Example1 ex;
    const LatticeReport r = equivalence_lattice(ex.p, ex.q, ex.u);
    CHECK(r.entries.size() == 16);
    CHECK(r.at({ex.set({ex.a}), ex.u}));
    CHECK_FALSE(r.at({ex.u, ex.set({ex.a})}));
    CHECK(r.uniform);
    CHECK_FALSE(r.strong);
    CHECK(r.ordinary == ordinary_equivalent(ex.p, ex.q, ex.u));
    for (const LatticeEntry& big : r.entries)
        for (const LatticeEntry& small : r.entries)
            if (big.equivalent && small.alphabet.heads.subset_of(big.alphabet.heads)
                && small.alphabet.bodies.subset_of(big.alphabet.bodies))
                CHECK(small.equivalent);
    const LatticeReport same = equivalence_lattice(ex.p, ex.p, ex.u);
    CHECK(std::all_of(same.entries.begin(), same.entries.end(), [](const LatticeEntry& e) { return e.equivalent; }));
    CHECK_THROWS_AS((void)equivalence_lattice(ex.p, ex.q, ex.u, 15), BudgetExceeded);
}

TEST_CASE("witness search, oracle containment and verdicts agree") {
    std::mt19937_64 rng(77);
    const AtomSet u{0, 1, 2};
    const auto vocab = all_rules(u);
    const auto alphabets = all_alphabets(u);
    for (int i = 0; i < 60; ++i) {
        const Program p = random_program(rng, vocab, 3);
        const Program q = random_program(rng, vocab, 3);
        for (const AlphabetPair& ab : alphabets) {
            const auto w       = find_witness(p, q, ab, u);
            const bool oracle  = oracle_contained(p, q, ab, u);
            const Verdict cont = decide_containment(p, q, ab, u);
            CHECK(w.has_value() == !oracle);
            CHECK(cont.equivalent == oracle);
            if (w) {
                CHECK(is_witness(p, q, ab, w->x, w->y));
                REQUIRE(cont.counterexample);
                CHECK(separates(p, q, *cont.counterexample));
            }
            else {
                // no pair at all satisfies the witness definition
                bool any = false;
                for (AtomSet y : subsets_of(u))
                    for (AtomSet x : subsets_of(y)) any = any || is_witness(p, q, ab, x, y);
                CHECK_FALSE(any);
            }
            const Verdict eq = decide_equivalence(p, q, ab, u);
            CHECK(eq.equivalent == (oracle && decide_containment(q, p, ab, u).equivalent));
            CHECK(eq.equivalent == decide_equivalence(q, p, ab, u).equivalent);
        }
    }
}

TEST_CASE("answer sets under unary contexts are H-total models") {
    std::mt19937_64 rng(9);
    const AtomSet u{0, 1, 2};
    const auto vocab = all_rules(u);
    for (int i = 0; i < 40; ++i) {
        const Program p = random_program(rng, vocab, 3);
        const ModelIndex idx(p, u);
        for (const AlphabetPair& ab : all_alphabets(u)) {
            const UnaryContextSpace space(ab, idx.frame());
            space.for_each([&](std::uint64_t, const ModelTable& ctx) {
                idx.answer_sets_with(ctx).for_each([&](std::uint64_t y) {
                    CHECK(is_h_total(p, idx.frame().expand(y), ab.heads));
                });
                return true;
            });
        }
    }
}

TEST_CASE("reflexivity and the default universe") {
    Example1 ex;
    const Program c = ex.parse("c.");
    CHECK(default_universe(ex.p, c) == (ex.u | AtomSet{*ex.ws.find("c")}));
    CHECK(decide_equivalence(ex.q, ex.q, {ex.u, ex.u}).equivalent);
    // alphabet atoms outside the universe are dropped
    const AtomId z = ex.ws.intern("z");
    CHECK(decide_equivalence(ex.p, ex.q, {ex.u | AtomSet{z}, AtomSet{z}}).equivalent);
}

} // TEST_SUITE
