/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "example1.h"
#include "pool.h"

#include <hbeq/decision.h>
#include <hbeq/reduction.h>

#include <doctest.h>

#include <set>

using namespace hbeq;
using namespace hbeq::testing;

namespace {

std::size_t count_rules(const Program& g, bool disjunctions) {
    std::size_t n = 0;
    for (const Rule& r : g.rules())
        if ((r.head.size() == 2) == disjunctions && !r.body().empty() == !disjunctions) ++n;
    return n;
}

bool mentions(const Program& p, AtomSet atoms) { return p.atoms().intersects(atoms); }

} // namespace

TEST_SUITE("reduction") {

TEST_CASE("guess program for a single head atom") {
    Example1 ex;
    FreshNamer namer(ex.ws, ex.u);
    const Program g = build_guess_program({ex.set({ex.a}), {}}, namer);
    CHECK(render_program(g, ex.ws)
          == "c__a__f__ctx | nc__a__f__ctx.\n"
             "a :- f__ctx, c__a__f__ctx.\n"
             "f__ctx.\n");
    CHECK(namer.issued().size() == 3);
}

TEST_CASE("guess program sizes") {
    Example1 ex;
    {
        FreshNamer namer(ex.ws, ex.u);
        const Program g = build_guess_program({{}, ex.u}, namer);
        CHECK(render_program(g, ex.ws) == "f__ctx.\n");
    }
    {
        FreshNamer namer(ex.ws, ex.u);
        const Program g = build_guess_program({ex.set({ex.a}), ex.set({ex.b})}, namer);
        CHECK(g.size() == 5);
        CHECK(count_rules(g, true) == 2);
        CHECK(count_rules(g, false) == 2);
    }
    {
        FreshNamer namer(ex.ws, ex.u);
        const Program g = build_guess_program({ex.u, ex.u}, namer);
        CHECK(g.size() == 2 * 2 * 3 + 1);
        CHECK(namer.issued().size() == 2 * 2 * 3 + 1);
    }
}

TEST_CASE("normalizing the guess") {
    Workspace ws;
    const Program g = parse_program("c | nc.", ws);
    CHECK(normalize_guess(g).same_rules(parse_program("c :- not nc. nc :- not c.", ws)));
    const Program plain = parse_program("a :- b, c. f.", ws);
    CHECK(normalize_guess(plain).same_rules(plain));
}

TEST_CASE("fresh names avoid user atoms") {
    Workspace ws;
    const Program p = parse_program("f__ctx :- a. c__a__f__ctx_.", ws);
    const Program q = parse_program("a.", ws);
    const ReductionOutput out = reduce_to_ordinary(p, q, {AtomSet{*ws.find("a")}, {}}, ws);
    CHECK_FALSE(out.fresh.intersects(p.atoms() | q.atoms()));
    CHECK(ws.find("f__ctx_"));
    CHECK(ws.find("c__a__f__ctx__"));
    CHECK(out.fresh.contains(*ws.find("nc__a__f__ctx_")));
    CHECK(out.fresh.contains(*ws.find("f__ctx_")));
    // original rules are untouched
    for (const Rule& r : p.rules()) CHECK(out.left.contains(r));
}

TEST_CASE("reduction on the running example") {
    for (ReductionMode mode : {ReductionMode::disjunctive, ReductionMode::normal}) {
        Example1 ex;
        const auto yes = reduce_to_ordinary(ex.p, ex.q, {ex.u, ex.set({ex.b})}, ex.ws, mode);
        const AtomSet uy = yes.left.atoms() | yes.right.atoms();
        CHECK(ordinary_equivalent(yes.left, yes.right, uy));
        const auto no = reduce_to_ordinary(ex.p, ex.q, {ex.set({ex.b}), ex.u}, ex.ws, mode);
        const AtomSet un = no.left.atoms() | no.right.atoms();
        CHECK_FALSE(ordinary_equivalent(no.left, no.right, un));
        CHECK(no.mode == mode);
        CHECK(no.left.size() == ex.p.size() + no.guess.size());
    }
}

TEST_CASE("positivity and normality are preserved") {
    Example1 ex;
    const Program pos = ex.parse("a :- b. b :- a.");
    const auto d = reduce_to_ordinary(ex.p, pos, {ex.u, ex.u}, ex.ws, ReductionMode::disjunctive);
    CHECK(d.left.is_positive());
    CHECK(d.right.is_positive());
    const Program normal = ex.parse("a :- not b. b :- a.");
    const auto n = reduce_to_ordinary(ex.q, normal, {ex.u, ex.u}, ex.ws, ReductionMode::normal);
    CHECK(n.left.is_normal());
    CHECK(n.right.is_normal());
    CHECK(n.guess.is_normal());
}

TEST_CASE("the guess program realizes every selection") {
    Workspace ws;
    const AtomId a = ws.intern("a"), b = ws.intern("b");
    for (ReductionMode mode : {ReductionMode::disjunctive, ReductionMode::normal}) {
        FreshNamer namer(ws, AtomSet{a, b});
        Program g = build_guess_program({AtomSet{a}, AtomSet{b}}, namer);
        if (mode == ReductionMode::normal) g = normalize_guess(g);
        AtomSet selectors;
        for (const Rule& r : g.rules())
            if (!r.pos.empty()) selectors |= r.pos - AtomSet{b} - AtomSet{*ws.find("f__ctx")};
        CHECK(selectors.size() == 2);
        std::set<std::uint64_t> seen;
        for (Interpretation y : answer_sets(g, g.atoms() | AtomSet{a, b})) seen.insert((y & selectors).bits());
        CHECK(seen.size() == 4);
    }
}

TEST_CASE("reduction agrees with the decision procedure on random pairs") {
    std::mt19937_64 rng(42);
    Workspace ws;
    for (const char* n : {"a", "b"}) ws.intern(n);
    const AtomSet u{0, 1};
    const auto vocab = all_rules(u);
    for (int i = 0; i < 40; ++i) {
        const Program p = random_program(rng, vocab, 2);
        const Program q = random_program(rng, vocab, 2);
        for (const AlphabetPair& ab : all_alphabets(u)) {
            const bool expect = decide_equivalence(p, q, ab).equivalent;
            for (ReductionMode mode : {ReductionMode::disjunctive, ReductionMode::normal}) {
                const auto out = reduce_to_ordinary(p, q, ab, ws, mode);
                CHECK_FALSE(mentions(p, out.fresh));
                const AtomSet cu = out.left.atoms() | out.right.atoms();
                CHECK(ordinary_equivalent(out.left, out.right, cu) == expect);
            }
        }
    }
}

} // TEST_SUITE
