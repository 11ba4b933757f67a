/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/characterization.h>
#include <hbeq/error.h>

#include <algorithm>

namespace hbeq {

namespace {

using simd::Cube;

/// Models of P^y other than y itself. Every quantifier of the
/// characterization ranges over proper subsets of y, and y is always in
/// T_y when y is a model, so removing it once saves a second exclusion
/// cube per query.
ModelTable proper_reduct_models(const ModelIndex& idx, std::uint64_t y) {
    ModelTable t = idx.reduct_models(y);
    t.reset(y);
    return t;
}

bool any(const ModelTable& t, Cube in, Cube out) {
    return simd::active_kernels().any_in_cube(t.data(), nullptr, t.words().size(), in, out);
}

bool h_total(const ModelTable& tp, std::uint64_t y, std::uint64_t h, std::uint64_t full) {
    return !any(tp, cubes::same_on(y, h, full), Cube::none());
}

Characterization expand(const ModelIndex& idx, const AlphabetPair& ab, std::vector<ModelPair> local) {
    for (ModelPair& m : local) {
        m.x = idx.frame().expand(m.x.bits());
        m.y = idx.frame().expand(m.y.bits());
    }
    return Characterization(ab, idx.frame().universe(), std::move(local));
}

ModelPair local_pair(std::uint64_t x, std::uint64_t y) { return {AtomSet(x), AtomSet(y)}; }

/// Calls f(y, T_y minus y) for every model y of P.
template <class F>
void for_each_model(const ModelIndex& idx, F&& f) {
    idx.models().for_each([&](std::uint64_t y) { f(y, proper_reduct_models(idx, y)); });
}

} // namespace

// Characterization

Characterization::Characterization(AlphabetPair alphabet, AtomSet universe, std::vector<ModelPair> pairs)
    : alphabet_(alphabet), universe_(universe), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Characterization::contains(const ModelPair& m) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), m);
}

InterpretationSet Characterization::totals() const {
    std::vector<Interpretation> ys;
    for (const ModelPair& m : pairs_)
        if (m.total()) ys.push_back(m.y);
    return InterpretationSet(std::move(ys));
}

// Order relation

bool preceq(Interpretation v, Interpretation z, const AlphabetPair& ab) {
    return v.restrict_to(ab.heads).subset_of(z.restrict_to(ab.heads))
        && z.restrict_to(ab.bodies).subset_of(v.restrict_to(ab.bodies));
}

bool prec_strict(Interpretation v, Interpretation z, const AlphabetPair& ab) {
    const AtomSet hb = ab.heads | ab.bodies;
    return preceq(v, z, ab) && v.restrict_to(hb) != z.restrict_to(hb);
}

// Direct definitions, used for spot checks and small inputs

namespace {

/// Calls f(z) for every subset z of s, s included.
template <class F>
bool all_subsets(AtomSet s, F&& f) {
    const std::uint64_t mask = s.bits();
    std::uint64_t z = 0;
    do {
        if (!f(AtomSet(z))) return false;
        z = (z - mask) & mask;
    } while (z != 0);
    return true;
}

} // namespace

bool is_h_total(const Program& p, Interpretation y, AtomSet h) {
    if (!satisfies(y, p)) return false;
    const Program py = reduct(p, y);
    return all_subsets(y, [&](AtomSet z) {
        return z == y || !satisfies(z, py) || z.restrict_to(h).proper_subset_of(y.restrict_to(h));
    });
}

bool is_preceq_maximal(const Program& p, Interpretation x, Interpretation y, const AlphabetPair& ab) {
    const Program py = reduct(p, y);
    if (!satisfies(x, py)) return false;
    return all_subsets(y, [&](AtomSet z) { return z == y || !prec_strict(x, z, ab) || !satisfies(z, py); });
}

// <H,B>-models

bool is_h_total_local(const ModelIndex& idx, std::uint64_t y, std::uint64_t h) {
    return idx.is_model(y) && h_total(proper_reduct_models(idx, y), y, h, idx.full());
}

Characterization hb_models(const Program& p, const AlphabetPair& ab, AtomSet universe) {
    const ModelIndex idx(p, universe);
    return hb_models(idx, ab);
}

Characterization hb_models(const ModelIndex& idx, const AlphabetPair& alphabet) {
    const AlphabetPair ab   = alphabet.restrict_to(idx.frame().universe());
    const std::uint64_t h   = idx.frame().compress(ab.heads);
    const std::uint64_t b   = idx.frame().compress(ab.bodies);
    const std::uint64_t hb  = h | b;
    const std::uint64_t full = idx.full();

    std::vector<ModelPair> out;
    for_each_model(idx, [&](std::uint64_t y, const ModelTable& tp) {
        if (!h_total(tp, y, h, full)) return;
        out.push_back(local_pair(y, y));
        for_each_subset(y, [&](std::uint64_t xp) {
            if (!tp.test(xp)) return;
            // (xp, y) is maximal: no strictly larger model of P^y below y
            const Cube strict_excl{hb, xp & hb};
            if (!any(tp, cubes::preceq_up(xp, y, h, b, full), strict_excl)) out.push_back(local_pair(xp & hb, y));
        });
    });
    return expand(idx, ab, std::move(out));
}

// Special cases

Characterization se_models(const Program& p, AtomSet universe) {
    const ModelIndex idx(p, universe);
    std::vector<ModelPair> out;
    idx.models().for_each([&](std::uint64_t y) {
        const ModelTable& t = idx.reduct_models(y);
        for_each_subset(y, [&](std::uint64_t x) {
            if (t.test(x)) out.push_back(local_pair(x, y));
        });
    });
    return expand(idx, {universe, universe}, std::move(out));
}

Characterization ue_models(const Program& p, AtomSet universe) {
    const ModelIndex idx(p, universe);
    const std::uint64_t full = idx.full();
    std::vector<ModelPair> out;
    for_each_model(idx, [&](std::uint64_t y, const ModelTable& tp) {
        out.push_back(local_pair(y, y));
        for_each_subset(y, [&](std::uint64_t x) {
            if (!tp.test(x)) return;
            // no X' with x < X' < y satisfies P^y
            const Cube between{x | (full & ~y), x};
            if (!any(tp, between, cubes::exactly(x, full))) out.push_back(local_pair(x, y));
        });
    });
    return expand(idx, {universe, {}}, std::move(out));
}

namespace {

/// Shared skeleton of the relativized families: (y, y) for every A-total
/// model y, plus (x, y) for x strictly inside y|A accepted by `keep`.
template <class Keep>
Characterization relativized(const Program& p, AtomSet a_global, AtomSet universe, AlphabetPair ab, Keep&& keep) {
    const ModelIndex idx(p, universe);
    const std::uint64_t a = idx.frame().compress(a_global);
    std::vector<ModelPair> out;
    std::vector<std::uint64_t> projections;
    idx.models().for_each([&](std::uint64_t y) {
        const ModelTable& t = idx.reduct_models(y);
        // (2): every proper y' of y satisfying P^y loses an atom of A
        bool total = true;
        for_each_subset(y, [&](std::uint64_t yp) {
            if (yp != y && t.test(yp) && (yp & a) == (y & a)) total = false;
        });
        if (!total) return;
        out.push_back(local_pair(y, y));

        // projections onto A of the models of P^y within y, y included
        projections.clear();
        for_each_subset(y, [&](std::uint64_t xp) {
            if (t.test(xp)) projections.push_back(xp & a);
        });
        std::sort(projections.begin(), projections.end());
        projections.erase(std::unique(projections.begin(), projections.end()), projections.end());

        const std::uint64_t ya = y & a;
        for (std::uint64_t x : projections) {
            if (x != ya && keep(x, y, t)) out.push_back(local_pair(x, y));
        }
    });
    ab = ab.restrict_to(universe);
    return expand(idx, ab, std::move(out));
}

} // namespace

Characterization rel_se_models(const Program& p, AtomSet a, AtomSet universe) {
    return relativized(p, a, universe, {a, a}, [](std::uint64_t, std::uint64_t, const ModelTable&) { return true; });
}

Characterization rel_ue_models(const Program& p, AtomSet a_global, AtomSet universe) {
    const std::uint64_t a = Frame(universe).compress(a_global);
    return relativized(p, a_global, universe, {a_global, {}},
                       [a](std::uint64_t x, std::uint64_t y, const ModelTable& t) {
                           // no x'' strictly inside y with x strictly inside x''|A satisfies P^y
                           bool ok = true;
                           for_each_subset(y, [&](std::uint64_t xpp) {
                               if (xpp == y || !t.test(xpp)) return;
                               const std::uint64_t s = xpp & a;
                               if ((x & ~s) == 0 && s != x) ok = false;
                           });
                           return ok;
                       });
}

AnswerSetFamily answer_sets_via_characterization(const Program& p, AtomSet universe) {
    return hb_models(p, {AtomSet{}, universe}, universe).totals();
}

} // namespace hbeq
