/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/syntax.h>

#include <string>
#include <string_view>

namespace hbeq {

enum class ReductionMode { disjunctive, normal };

[[nodiscard]] std::string_view mode_name(ReductionMode m);

/// Picks names for the new atoms of a guess program and interns them.
/// Names follow c__<a>__<b>, nc__<a>__<b> and f__ctx; a name already used
/// by a reserved (user) atom or an earlier fresh atom gets underscores
/// appended until it is new.
class FreshNamer {
public:
    FreshNamer(Workspace& ws, AtomSet reserved) : ws_(ws), reserved_(reserved) {}

    AtomId fresh(std::string base);
    [[nodiscard]] AtomSet issued() const { return issued_; }
    [[nodiscard]] const Workspace& workspace() const { return ws_; }

private:
    Workspace& ws_;
    AtomSet    reserved_;
    AtomSet    issued_;
};

/// The guess program: for a in H and b in B u {f},
///     c_ab | nc_ab.    a :- b, c_ab.
/// followed by the fact f. Guess disjunctions and conditional rules are
/// interleaved per (a, b), heads in id order, b = f last.
[[nodiscard]] Program build_guess_program(const AlphabetPair& ab, FreshNamer& namer);

/// Replaces each two-atom bodiless disjunction c | nc. by
///     c :- not nc.    nc :- not c.
/// and keeps every other rule.
[[nodiscard]] Program normalize_guess(const Program& g);

struct ReductionOutput {
    Program       left;  ///< P u R<H,B>
    Program       right; ///< Q u R<H,B>
    Program       guess; ///< R<H,B> as added to both sides
    AtomSet       fresh;
    ReductionMode mode = ReductionMode::disjunctive;
};

/// P is <H,B>-equivalent to Q iff left and right have the same answer
/// sets. H and B are intersected with atoms(p) u atoms(q); fresh atoms
/// are interned into `ws`.
[[nodiscard]] ReductionOutput reduce_to_ordinary(const Program& p, const Program& q, const AlphabetPair& ab,
                                                 Workspace& ws, ReductionMode mode = ReductionMode::disjunctive);

} // namespace hbeq
