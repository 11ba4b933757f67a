/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/decision.h>
#include <hbeq/error.h>

#include <algorithm>

namespace hbeq {

namespace {

using simd::Cube;

bool any(const ModelTable& t, Cube in, Cube out) {
    return simd::active_kernels().any_in_cube(t.data(), nullptr, t.words().size(), in, out);
}

void require_same_frame(const ModelIndex& p, const ModelIndex& q) {
    if (p.frame().universe() != q.frame().universe()) throw Error("model indices use different universes");
}

/// First x within y, in increasing order, for which pred(x) holds.
template <class Pred>
std::optional<std::uint64_t> first_subset(std::uint64_t y, Pred&& pred) {
    std::uint64_t x = 0;
    do {
        if (pred(x)) return x;
        x = (x - y) & y;
    } while (x != 0);
    return std::nullopt;
}

std::optional<std::uint64_t> first_difference(const ModelTable& a, const ModelTable& b) {
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        if (std::uint64_t d = a.data()[w] ^ b.data()[w]; d != 0)
            return (static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(std::countr_zero(d));
    }
    return std::nullopt;
}

/// Witness from either containment plus its validated counterexample.
Verdict not_equivalent(const Program& p, const Program& q, const ModelIndex& ip, const ModelIndex& iq,
                       const AlphabetPair& ab, Method method) {
    std::optional<Witness> w = find_witness(ip, iq, ab);
    if (!w) {
        w = find_witness(iq, ip, ab);
        if (w) w->direction = Containment::right_in_left;
    }
    if (!w) throw InconsistencyError("characterizations differ but neither containment has a witness");
    return Verdict{false, w, witness_to_counterexample(p, q, *w, ab, ip.frame().universe()), method};
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
    case Method::sigma_comparison: return "sigma-comparison";
    case Method::witness_search: return "witness-search";
    case Method::oracle: return "oracle";
    case Method::positive_fast_path: return "positive-fast-path";
    case Method::reduction: return "reduction";
    }
    return "unknown";
}

AtomSet default_universe(const Program& p, const Program& q) { return p.atoms() | q.atoms(); }

// Witnesses

bool is_witness(const Program& p, const Program& q, const AlphabetPair& ab, Interpretation x, Interpretation y) {
    if (!x.subset_of(y) || !is_h_total(p, y, ab.heads)) return false;
    if (!satisfies(y, q)) return true;
    if (x == y || !satisfies(x, reduct(q, y))) return false;
    const Program py = reduct(p, y);
    const std::uint64_t mask = y.bits();
    std::uint64_t z = 0;
    do {
        const AtomSet zs(z);
        if (zs != y && preceq(x, zs, ab) && satisfies(zs, py)) return false;
        z = (z - mask) & mask;
    } while (z != 0);
    return true;
}

std::optional<Witness> find_witness(const Program& p, const Program& q, const AlphabetPair& ab, AtomSet universe) {
    const ModelIndex ip(p, universe);
    const ModelIndex iq(q, universe);
    return find_witness(ip, iq, ab);
}

std::optional<Witness> find_witness(const ModelIndex& p, const ModelIndex& q, const AlphabetPair& ab) {
    require_same_frame(p, q);
    const Frame& frame       = p.frame();
    const std::uint64_t h    = frame.compress(ab.heads);
    const std::uint64_t b    = frame.compress(ab.bodies);
    const std::uint64_t full = frame.full();

    std::optional<Witness> found;
    p.models().for_each([&](std::uint64_t y) {
        if (found) return;
        ModelTable tp = p.reduct_models(y);
        tp.reset(y);
        // (i) y is H-total for p
        if (any(tp, cubes::same_on(y, h, full), Cube::none())) return;
        // (ii) holds vacuously when y is not a model of q
        if (!q.is_model(y)) {
            found = Witness{frame.expand(y), frame.expand(y)};
            return;
        }
        const ModelTable& tq = q.reduct_models(y);
        auto x = first_subset(y, [&](std::uint64_t x) {
            return x != y && tq.test(x) && !any(tp, cubes::preceq_up(x, y, h, b, full), Cube::none());
        });
        if (x) found = Witness{frame.expand(*x), frame.expand(y)};
    });
    return found;
}

// Counterexamples

Program unary_context(const Witness& w, const AlphabetPair& ab) {
    Program r;
    for (AtomId a : w.x.restrict_to(ab.heads)) r.add(Rule{AtomSet::single(a), {}, {}});
    const AtomSet diff = w.y - w.x;
    for (AtomId a : diff.restrict_to(ab.heads))
        for (AtomId b : diff.restrict_to(ab.bodies)) r.add(Rule{AtomSet::single(a), AtomSet::single(b), {}});
    return r;
}

Counterexample witness_to_counterexample(const Program& p, const Program& q, const Witness& w,
                                         const AlphabetPair& ab, AtomSet universe) {
    const bool forward    = w.direction == Containment::left_in_right;
    const Program& first  = forward ? p : q;
    const Program& second = forward ? q : p;

    Counterexample c{unary_context(w, ab), w.y, forward ? Side::left : Side::right};
    if (!c.context.is_unary() || !in_class(c.context, ab))
        throw InvalidWitnessError("synthesized context is not a unary program of the class");
    const bool in_first  = answer_sets(first | c.context, universe).contains(w.y);
    const bool in_second = answer_sets(second | c.context, universe).contains(w.y);
    if (!in_first || in_second) throw InvalidWitnessError("synthesized context does not separate the programs");
    return c;
}

// Containment and equivalence

Verdict decide_containment(const Program& p, const Program& q, const AlphabetPair& ab, AtomSet universe) {
    const AlphabetPair r = ab.restrict_to(universe);
    Verdict v;
    v.method = Method::witness_search;
    if (auto w = find_witness(p, q, r, universe)) {
        v.equivalent     = false;
        v.witness        = w;
        v.counterexample = witness_to_counterexample(p, q, *w, r, universe);
    }
    return v;
}

Verdict decide_containment(const Program& p, const Program& q, const AlphabetPair& ab) {
    return decide_containment(p, q, ab, default_universe(p, q));
}

Verdict decide_equivalence(const Program& p, const Program& q, const AlphabetPair& ab, AtomSet universe) {
    const ModelIndex ip(p, universe);
    const ModelIndex iq(q, universe);
    return decide_equivalence(p, q, ip, iq, ab);
}

Verdict decide_equivalence(const Program& p, const Program& q, const AlphabetPair& ab) {
    return decide_equivalence(p, q, ab, default_universe(p, q));
}

Verdict decide_equivalence(const Program& p, const Program& q, const ModelIndex& ip, const ModelIndex& iq,
                           const AlphabetPair& ab) {
    require_same_frame(ip, iq);
    const AlphabetPair r = ab.restrict_to(ip.frame().universe());
    if (hb_models(ip, r).pairs() == hb_models(iq, r).pairs()) return Verdict{};
    return not_equivalent(p, q, ip, iq, r, Method::sigma_comparison);
}

// Oracle

UnaryContextSpace::UnaryContextSpace(const AlphabetPair& alphabet, const Frame& frame) : frame_(frame) {
    const AlphabetPair ab = alphabet.restrict_to(frame.universe());
    for (AtomId a : ab.heads) items_.push_back(Rule{AtomSet::single(a), {}, {}});
    for (AtomId a : ab.heads)
        for (AtomId b : ab.bodies) items_.push_back(Rule{AtomSet::single(a), AtomSet::single(b), {}});
    tables_.reserve(items_.size());
    for (const Rule& r : items_)
        tables_.push_back(clause_table(frame.width(), frame.compress(r.head), frame.compress(r.pos)));
}

std::uint64_t UnaryContextSpace::checked_size(std::uint64_t budget) const {
    if (items_.size() >= 63 || (std::uint64_t{1} << items_.size()) > budget)
        throw BudgetExceeded("2^" + std::to_string(items_.size()) + " unary contexts exceed the budget of "
                             + std::to_string(budget));
    return std::uint64_t{1} << items_.size();
}

Program UnaryContextSpace::context(std::uint64_t k) const {
    Program r;
    for (std::size_t i = 0; i < items_.size(); ++i)
        if ((k >> i) & 1u) r.add(items_[i]);
    return r;
}

Verdict oracle_equivalence(const Program& p, const Program& q, const AlphabetPair& ab, AtomSet universe,
                           std::uint64_t budget) {
    const ModelIndex ip(p, universe);
    const ModelIndex iq(q, universe);
    const UnaryContextSpace space(ab, ip.frame());
    (void)space.checked_size(budget);

    Verdict v;
    v.method = Method::oracle;
    space.for_each([&](std::uint64_t k, const ModelTable& context) {
        const ModelTable asp = ip.answer_sets_with(context);
        const ModelTable asq = iq.answer_sets_with(context);
        const auto y         = first_difference(asp, asq);
        if (!y) return true;
        v.equivalent     = false;
        v.counterexample = Counterexample{space.context(k), ip.frame().expand(*y), asp.test(*y) ? Side::left : Side::right};
        return false;
    });
    return v;
}

std::vector<std::uint64_t> oracle_profile(const ModelIndex& idx, const UnaryContextSpace& space) {
    std::vector<std::uint64_t> out;
    space.for_each([&](std::uint64_t, const ModelTable& context) {
        const ModelTable as = idx.answer_sets_with(context);
        out.insert(out.end(), as.words().begin(), as.words().end());
        return true;
    });
    return out;
}

// Positive programs

Verdict decide_equivalence_positive(const Program& p, const Program& q, AtomSet h, AtomSet universe) {
    if (!p.is_positive() || !q.is_positive())
        throw NotPositiveError("the positive fast path requires programs without negation");
    const ModelIndex ip(p, universe);
    const ModelIndex iq(q, universe);
    const AlphabetPair ab{h & universe, {}};
    const std::uint64_t hl = ip.frame().compress(ab.heads);

    bool same = true;
    for (std::uint64_t y = 0; y < ip.frame().interpretation_count() && same; ++y)
        same = is_h_total_local(ip, y, hl) == is_h_total_local(iq, y, hl);
    if (same) return Verdict{true, std::nullopt, std::nullopt, Method::positive_fast_path};
    return not_equivalent(p, q, ip, iq, ab, Method::positive_fast_path);
}

// Lattice

bool LatticeReport::at(const AlphabetPair& ab) const {
    const AlphabetPair r = ab.restrict_to(universe);
    auto it = std::find_if(entries.begin(), entries.end(), [&](const LatticeEntry& e) { return e.alphabet == r; });
    if (it == entries.end()) throw Error("alphabet pair not in lattice");
    return it->equivalent;
}

LatticeReport equivalence_lattice(const Program& p, const Program& q, AtomSet universe, std::uint64_t budget) {
    const ModelIndex ip(p, universe);
    const ModelIndex iq(q, universe);
    const Frame& frame = ip.frame();
    const unsigned n   = frame.width();
    if (2 * n >= 63 || (std::uint64_t{1} << (2 * n)) > budget)
        throw BudgetExceeded("4^" + std::to_string(n) + " alphabet pairs exceed the budget of " + std::to_string(budget));

    LatticeReport report;
    report.universe = universe;
    for_each_subset(frame.full(), [&](std::uint64_t h) {
        for_each_subset(frame.full(), [&](std::uint64_t b) {
            const AlphabetPair ab{frame.expand(h), frame.expand(b)};
            report.entries.push_back({ab, hb_models(ip, ab).pairs() == hb_models(iq, ab).pairs()});
        });
    });
    report.ordinary = report.at({{}, universe});
    report.uniform  = report.at({universe, {}});
    report.strong   = report.at({universe, universe});
    return report;
}

} // namespace hbeq
