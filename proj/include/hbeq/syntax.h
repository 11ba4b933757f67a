/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <hbeq/atom_set.h>

#include <compare>
#include <deque>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hbeq {

/// Interns atom names to dense ids. Interning is the only mutating
/// operation and is serialized; names are never removed, so references
/// returned by name() stay valid.
class Workspace {
public:
    Workspace() = default;
    Workspace(const Workspace&)            = delete;
    Workspace& operator=(const Workspace&) = delete;

    /// Returns the id of `name`, interning it first if necessary.
    /// Throws Error for malformed names and LimitError past kMaxAtoms.
    AtomId intern(std::string_view name);
    [[nodiscard]] std::optional<AtomId> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(AtomId id) const;
    [[nodiscard]] std::size_t size() const;
    /// Every interned atom.
    [[nodiscard]] AtomSet all() const;

    /// "{a, b}" in id order.
    [[nodiscard]] std::string format(AtomSet s) const;
    /// Atom names in id order.
    [[nodiscard]] std::vector<std::string> names(AtomSet s) const;

    [[nodiscard]] static bool valid_name(std::string_view name);

private:
    mutable std::mutex                       mutex_;
    std::deque<std::string>                  names_;
    std::unordered_map<std::string, AtomId>  ids_;
};

/// H(r) <- B+(r), not B-(r).
struct Rule {
    AtomSet head;
    AtomSet pos;
    AtomSet neg;

    [[nodiscard]] AtomSet body() const { return pos | neg; }
    [[nodiscard]] AtomSet atoms() const { return head | pos | neg; }
    [[nodiscard]] bool empty() const { return atoms().empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

struct RuleClass {
    bool is_fact       = false;
    bool is_constraint = false;
    bool is_positive   = false;
    bool is_normal     = false;
    bool is_unary      = false;
};

[[nodiscard]] RuleClass classify_rule(const Rule& r);

/// A finite set of rules together with the universe it is evaluated over.
/// Rules keep their first-insertion order; duplicates are dropped.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules);

    /// Adds `r` unless already present; returns false for duplicates.
    /// The empty rule is accepted here (it is the always-violated rule a
    /// reduct makes of `:- not a.`); only the parser rejects it.
    bool add(const Rule& r);
    void add_all(const Program& other);

    [[nodiscard]] std::span<const Rule> rules() const { return rules_; }
    [[nodiscard]] std::size_t size() const { return rules_.size(); }
    [[nodiscard]] bool empty() const { return rules_.empty(); }
    [[nodiscard]] bool contains(const Rule& r) const;

    /// Always a superset of atoms().
    [[nodiscard]] AtomSet universe() const { return universe_; }
    void extend_universe(AtomSet atoms) { universe_ |= atoms; }

    [[nodiscard]] AtomSet heads() const;
    [[nodiscard]] AtomSet bodies() const;
    [[nodiscard]] AtomSet atoms() const;
    /// Union of all negative bodies.
    [[nodiscard]] AtomSet negated() const;

    [[nodiscard]] bool is_positive() const;
    [[nodiscard]] bool is_normal() const;
    [[nodiscard]] bool is_unary() const;

    /// Set equality on rules; order and universe are ignored.
    [[nodiscard]] bool same_rules(const Program& other) const;

    friend Program operator|(const Program& a, const Program& b) {
        Program r = a;
        r.add_all(b);
        return r;
    }

private:
    std::vector<Rule> rules_;
    AtomSet           universe_;
};

/// The (H, B) alphabets of a context class C<H,B>.
struct AlphabetPair {
    AtomSet heads;
    AtomSet bodies;

    [[nodiscard]] AlphabetPair restrict_to(AtomSet universe) const {
        return {heads & universe, bodies & universe};
    }
    friend bool operator==(const AlphabetPair&, const AlphabetPair&) = default;
    friend auto operator<=>(const AlphabetPair&, const AlphabetPair&) = default;
};

/// True iff H(p) is within ab.heads and B(p) within ab.bodies.
[[nodiscard]] bool in_class(const Program& p, const AlphabetPair& ab);

struct SymbolSets {
    AtomSet heads;
    AtomSet bodies;
    AtomSet atoms;
};

[[nodiscard]] SymbolSets symbol_sets(const Program& p);

/// Parses the textual program format:
///
///     program := { rule }
///     rule    := [ head ] [ ":-" body ] "."
///     head    := atom { "|" atom }
///     body    := literal { "," literal }
///     literal := [ "not" ] atom
///
/// '%' starts a line comment. `not` is reserved and cannot name an atom.
/// Throws ParseError (with line/column) on malformed input, including a
/// rule with neither head nor body.
[[nodiscard]] Program parse_program(std::string_view text, Workspace& ws);

/// One rule per line; atoms in interning order, positive body before
/// negative body.
[[nodiscard]] std::string render_rule(const Rule& r, const Workspace& ws);
[[nodiscard]] std::string render_program(const Program& p, const Workspace& ws);

} // namespace hbeq
