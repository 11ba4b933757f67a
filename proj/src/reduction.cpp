/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/reduction.h>

namespace hbeq {

std::string_view mode_name(ReductionMode m) { return m == ReductionMode::normal ? "normal" : "disjunctive"; }

AtomId FreshNamer::fresh(std::string base) {
    for (;; base += '_') {
        auto existing = ws_.find(base);
        if (existing && (reserved_.contains(*existing) || issued_.contains(*existing))) continue;
        const AtomId id = ws_.intern(base);
        issued_.insert(id);
        return id;
    }
}

Program build_guess_program(const AlphabetPair& ab, FreshNamer& namer) {
    Program g;
    const AtomId f = namer.fresh("f__ctx");
    const Workspace& ws = namer.workspace();
    for (AtomId a : ab.heads) {
        auto emit = [&](AtomId b) {
            const std::string suffix = ws.name(a) + "__" + ws.name(b);
            const AtomId c  = namer.fresh("c__" + suffix);
            const AtomId nc = namer.fresh("nc__" + suffix);
            g.add(Rule{AtomSet{c, nc}, {}, {}});
            g.add(Rule{AtomSet::single(a), AtomSet{b, c}, {}});
        };
        for (AtomId b : ab.bodies) emit(b);
        emit(f);
    }
    g.add(Rule{AtomSet::single(f), {}, {}});
    return g;
}

Program normalize_guess(const Program& g) {
    Program out;
    out.extend_universe(g.universe());
    for (const Rule& r : g.rules()) {
        if (r.head.size() == 2 && r.body().empty()) {
            auto it          = r.head.begin();
            const AtomId c   = *it;
            const AtomId nc  = *++it;
            out.add(Rule{AtomSet::single(c), {}, AtomSet::single(nc)});
            out.add(Rule{AtomSet::single(nc), {}, AtomSet::single(c)});
        }
        else {
            out.add(r);
        }
    }
    return out;
}

ReductionOutput reduce_to_ordinary(const Program& p, const Program& q, const AlphabetPair& ab, Workspace& ws,
                                   ReductionMode mode) {
    const AtomSet user = p.atoms() | q.atoms();
    FreshNamer namer(ws, user);
    ReductionOutput out;
    out.guess = build_guess_program(ab.restrict_to(user), namer);
    if (mode == ReductionMode::normal) out.guess = normalize_guess(out.guess);
    out.fresh = namer.issued();
    out.mode  = mode;
    out.left  = p | out.guess;
    out.right = q | out.guess;
    out.left.extend_universe(user);
    out.right.extend_universe(user);
    return out;
}

} // namespace hbeq
