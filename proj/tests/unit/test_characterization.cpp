/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "example1.h"
#include "naive.h"
#include "pool.h"

#include <hbeq/characterization.h>

#include <doctest.h>

using namespace hbeq;
using namespace hbeq::testing;

namespace {

/// Definition of <H,B>-models spelled out with the direct predicates.
std::vector<ModelPair> hb_models_by_definition(const Program& p, const AlphabetPair& ab, AtomSet u) {
    std::vector<ModelPair> out;
    const AtomSet hb = ab.heads | ab.bodies;
    for (AtomSet y : subsets_of(u)) {
        if (!is_h_total(p, y, ab.heads)) continue;
        for (AtomSet x : subsets_of(y)) {
            bool ok = x == y;
            if (!ok && x.subset_of(hb)) {
                for (AtomSet xp : subsets_of(y))
                    ok = ok || (xp != y && xp.restrict_to(hb) == x && is_preceq_maximal(p, xp, y, ab));
            }
            if (ok) out.push_back({x, y});
        }
    }
    return out;
}

/// <U,B>-models by the body-relativized closed form.
std::vector<ModelPair> body_closed_form(const Program& p, AtomSet b, AtomSet u) {
    std::vector<ModelPair> out;
    for (AtomSet y : subsets_of(u)) {
        if (!naive_sat(y.bits(), p)) continue;
        for (AtomSet x : subsets_of(y)) {
            if (!naive_sat_reduct(x.bits(), p, y.bits())) continue;
            bool ok = true;
            for (AtomSet xp : subsets_of(y))
                if (xp != y && x.proper_subset_of(xp) && xp.restrict_to(b) == x.restrict_to(b)
                    && naive_sat_reduct(xp.bits(), p, y.bits()))
                    ok = false;
            if (ok) out.push_back({x, y});
        }
    }
    return out;
}

/// <H,U>-models by the head-relativized closed form.
std::vector<ModelPair> head_closed_form(const Program& p, AtomSet h, AtomSet u) {
    std::vector<ModelPair> out;
    for (AtomSet y : subsets_of(u)) {
        if (!is_h_total(p, y, h)) continue;
        for (AtomSet x : subsets_of(y)) {
            if (!naive_sat_reduct(x.bits(), p, y.bits())) continue;
            bool ok = true;
            for (AtomSet xp : subsets_of(x))
                if (xp != x && xp.restrict_to(h) == x.restrict_to(h) && naive_sat_reduct(xp.bits(), p, y.bits()))
                    ok = false;
            if (ok) out.push_back({x, y});
        }
    }
    return out;
}

std::vector<ModelPair> sorted(std::vector<ModelPair> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// A pool of programs over three atoms used by the coincidence checks.
std::vector<Program> sample_pool() {
    std::vector<Program> out = programs_upto_two(small_rules(AtomSet{0, 1, 2}, 2));
    std::vector<Program> sample;
    for (std::size_t i = 0; i < out.size(); i += 5) sample.push_back(out[i]);
    return sample;
}

} // namespace

TEST_SUITE("characterization") {

TEST_CASE("the alphabet order") {
    Example1 ex;
    const AlphabetPair ab{ex.u, ex.set({ex.b})};
    CHECK(preceq(AtomSet{}, ex.set({ex.a}), ab));
    CHECK(prec_strict(AtomSet{}, ex.set({ex.a}), ab));
    CHECK_FALSE(prec_strict(ex.u, ex.u, ab));
    for (AtomSet v : subsets_of(ex.u))
        for (AtomSet z : subsets_of(ex.u)) CHECK(preceq(v, z, {ex.u, ex.u}) == (v == z));
}

TEST_CASE("order properties over three and four atoms") {
    const AtomSet u3{0, 1, 2};
    for (const AlphabetPair& ab : all_alphabets(u3)) {
        for (AtomSet v : subsets_of(u3)) {
            CHECK(preceq(v, v, ab));
            CHECK_FALSE(prec_strict(v, v, ab));
            for (AtomSet z : subsets_of(u3)) {
                // both encodings of the strict order agree
                CHECK(prec_strict(v, z, ab) == (preceq(v, z, ab) && !preceq(z, v, ab)));
                if (prec_strict(v, z, ab)) CHECK_FALSE(prec_strict(z, v, ab));
                for (AtomSet w : subsets_of(u3))
                    if (preceq(v, z, ab) && preceq(z, w, ab)) CHECK(preceq(v, w, ab));
            }
        }
    }
    const AtomSet u4{0, 1, 2, 3};
    for (const AlphabetPair& ab : all_alphabets(u4))
        for (AtomSet v : subsets_of(u4)) CHECK(preceq(v, v, ab));
}

TEST_CASE("special shapes of the order") {
    const AtomSet u{0, 1, 2, 3};
    for (AtomSet a : subsets_of(u)) {
        for (AtomSet v : subsets_of(u)) {
            for (AtomSet z : subsets_of(u)) {
                // H = U
                CHECK(preceq(v, z, {u, a}) == (v.subset_of(z) && v.restrict_to(a) == z.restrict_to(a)));
                // B = U
                CHECK(preceq(v, z, {a, u}) == (z.subset_of(v) && v.restrict_to(a) == z.restrict_to(a)));
                // H = B = A
                CHECK(preceq(v, z, {a, a}) == (v.restrict_to(a) == z.restrict_to(a)));
                // B within H
                for (AtomSet b : subsets_of(a))
                    CHECK(preceq(v, z, {a, b})
                          == (v.restrict_to(a).subset_of(z.restrict_to(a)) && v.restrict_to(b) == z.restrict_to(b)));
            }
        }
    }
}

TEST_CASE("positive programs are upward closed along the order") {
    std::mt19937_64 rng(2);
    const AtomSet u{0, 1, 2};
    std::vector<Rule> positive;
    for (const Rule& r : all_rules(u))
        if (r.neg.empty()) positive.push_back(r);
    for (int i = 0; i < 300; ++i) {
        const Program p = random_program(rng, positive, 3);
        const AlphabetPair ab{p.heads(), p.bodies()};
        for (AtomSet v : subsets_of(u))
            for (AtomSet z : subsets_of(u))
                if (satisfies(v, p) && preceq(v, z, ab)) CHECK(satisfies(z, p));
    }
}

TEST_CASE("H-total models") {
    Example1 ex;
    CHECK(is_h_total(ex.p, ex.u, ex.set({ex.b})));
    CHECK(is_h_total(ex.p, ex.set({ex.a}), ex.set({ex.b})));
    CHECK_FALSE(is_h_total(ex.p, ex.u, ex.set({ex.a})));
    CHECK_FALSE(is_h_total(ex.q, ex.u, ex.set({ex.a})));
    // empty-H totality is exactly being an answer set
    std::mt19937_64 rng(1);
    const AtomSet u{0, 1, 2};
    const auto vocab = all_rules(u);
    for (int i = 0; i < 400; ++i) {
        const Program p = random_program(rng, vocab, 3);
        const ModelIndex idx(p, u);
        for (AtomSet y : subsets_of(u)) {
            CHECK(is_h_total(p, y, {}) == naive_is_answer_set(p, y.bits()));
            for (AtomSet h : subsets_of(u))
                CHECK(is_h_total(p, y, h) == is_h_total_local(idx, y.bits(), h.bits()));
        }
    }
}

TEST_CASE("maximality") {
    Example1 ex;
    const AlphabetPair ab{ex.set({ex.b}), ex.u};
    CHECK(is_preceq_maximal(ex.q, AtomSet{}, ex.u, ab));
    CHECK_FALSE(is_preceq_maximal(ex.p, AtomSet{}, ex.u, ab));
    // with H = B = U maximality is just satisfying the reduct
    for (AtomSet y : subsets_of(ex.u))
        for (AtomSet x : subsets_of(y))
            CHECK(is_preceq_maximal(ex.q, x, y, {ex.u, ex.u}) == naive_sat_reduct(x.bits(), ex.q, y.bits()));
}

TEST_CASE("<H,B>-models of the running example") {
    Example1 ex;
    const AtomSet a = ex.set({ex.a}), b = ex.set({ex.b});
    const std::vector<ModelPair> expect{{a, a}, {a, ex.u}, {ex.u, ex.u}};
    CHECK(hb_models(ex.p, {ex.u, b}, ex.u).pairs() == expect);
    CHECK(hb_models(ex.q, {ex.u, b}, ex.u).pairs() == expect);

    CHECK(hb_models(ex.q, {b, ex.u}, ex.u).contains(AtomSet{}, ex.u));
    CHECK_FALSE(hb_models(ex.p, {b, ex.u}, ex.u).contains(AtomSet{}, ex.u));

    const std::vector<ModelPair> only{{a, a}};
    CHECK(hb_models(ex.p, {a, ex.u}, ex.u).pairs() == only);
    CHECK(hb_models(ex.q, {a, ex.u}, ex.u).pairs() == only);
}

TEST_CASE("closed forms on the running example") {
    Example1 ex;
    const AtomSet a = ex.set({ex.a});
    CHECK(se_models(ex.q, ex.u).pairs() == std::vector<ModelPair>{{a, a}, {{}, ex.u}, {a, ex.u}, {ex.u, ex.u}});
    const std::vector<ModelPair> three{{a, a}, {a, ex.u}, {ex.u, ex.u}};
    CHECK(se_models(ex.p, ex.u).pairs() == three);
    CHECK(ue_models(ex.p, ex.u).pairs() == three);
    CHECK(ue_models(ex.q, ex.u).pairs() == three);
    CHECK(se_models(Program{}, a).size() == 3);
    CHECK(ue_models(ex.parse("a."), a).pairs() == std::vector<ModelPair>{{a, a}});
    CHECK(rel_ue_models(ex.parse("a."), a, a).pairs() == std::vector<ModelPair>{{a, a}});
    CHECK(rel_se_models(ex.p, ex.set({ex.b}), ex.u).contains(ex.u, ex.u));
    CHECK(answer_sets_via_characterization(ex.p, ex.u) == InterpretationSet({a}));
    CHECK(answer_sets_via_characterization(ex.parse("a :- a."), a) == InterpretationSet({AtomSet{}}));
    const Characterization ue = ue_models(ex.q, ex.u);
    for (const ModelPair& m : ue.pairs()) CHECK(se_models(ex.q, ex.u).contains(m));
}

TEST_CASE("hb_models follows the definition literally") {
    std::mt19937_64 rng(31);
    const AtomSet u{0, 1, 2};
    const auto vocab = all_rules(u);
    const auto alphabets = all_alphabets(u);
    for (int i = 0; i < 120; ++i) {
        const Program p = random_program(rng, vocab, 3);
        const ModelIndex idx(p, u);
        for (const AlphabetPair& ab : alphabets) {
            const Characterization c = hb_models(idx, ab);
            CHECK(c.pairs() == sorted(hb_models_by_definition(p, ab, u)));
            for (const ModelPair& m : c.pairs()) {
                CHECK(c.contains(m.y, m.y));
                if (!m.total()) {
                    CHECK(m.x.subset_of(m.y.restrict_to(ab.heads | ab.bodies)));
                    CHECK(m.x.restrict_to(ab.heads).proper_subset_of(m.y.restrict_to(ab.heads)));
                }
            }
        }
    }
}

TEST_CASE("closed forms coincide with hb_models on a sampled pool") {
    const AtomSet u{0, 1, 2};
    for (const Program& p : sample_pool()) {
        const ModelIndex idx(p, u);
        CHECK(hb_models(idx, {u, u}).pairs() == se_models(p, u).pairs());
        CHECK(hb_models(idx, {u, {}}).pairs() == ue_models(p, u).pairs());
        CHECK(hb_models(idx, {{}, u}).totals() == answer_sets(p, u));
        for (AtomSet a : subsets_of(u)) {
            CHECK(hb_models(idx, {a, a}).pairs() == rel_se_models(p, a, u).pairs());
            CHECK(hb_models(idx, {a, {}}).pairs() == rel_ue_models(p, a, u).pairs());
            CHECK(hb_models(idx, {u, a}).pairs() == sorted(body_closed_form(p, a, u)));
            CHECK(hb_models(idx, {a, u}).pairs() == sorted(head_closed_form(p, a, u)));
        }
        CHECK(rel_se_models(p, u, u).pairs() == se_models(p, u).pairs());
        CHECK(rel_ue_models(p, u, u).pairs() == ue_models(p, u).pairs());
        CHECK(rel_se_models(p, {}, u).totals() == answer_sets(p, u));
    }
}

TEST_CASE("alphabets are intersected with the universe") {
    Example1 ex;
    const AtomId c = ex.ws.intern("c");
    const AlphabetPair wide{AtomSet{ex.a, c}, AtomSet{ex.b, c}};
    const Characterization m = hb_models(ex.p, wide, ex.u);
    CHECK(m.alphabet() == AlphabetPair{ex.set({ex.a}), ex.set({ex.b})});
    CHECK(m.pairs() == hb_models(ex.p, {ex.set({ex.a}), ex.set({ex.b})}, ex.u).pairs());
}

} // TEST_SUITE
