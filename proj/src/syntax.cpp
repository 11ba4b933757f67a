/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <hbeq/error.h>
#include <hbeq/syntax.h>

#include <algorithm>
#include <cctype>

namespace hbeq {

// Workspace

bool Workspace::valid_name(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

AtomId Workspace::intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    if (!valid_name(name) || name == "not") throw Error("invalid atom name '" + std::string(name) + "'");
    if (names_.size() >= kMaxAtoms)
        throw LimitError("workspace is limited to " + std::to_string(kMaxAtoms) + " atoms");
    auto id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<AtomId> Workspace::find(std::string_view name) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

const std::string& Workspace::name(AtomId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return names_.at(id);
}

std::size_t Workspace::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return names_.size();
}

AtomSet Workspace::all() const { return AtomSet::first(size()); }

std::vector<std::string> Workspace::names(AtomSet s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (AtomId a : s) out.push_back(name(a));
    return out;
}

std::string Workspace::format(AtomSet s) const {
    std::string out = "{";
    bool first = true;
    for (AtomId a : s) {
        if (!first) out += ", ";
        out += name(a);
        first = false;
    }
    return out + "}";
}

// Rules and programs

RuleClass classify_rule(const Rule& r) {
    RuleClass c;
    c.is_fact       = r.head.size() == 1 && r.body().empty();
    c.is_constraint = r.head.empty();
    c.is_positive   = r.neg.empty();
    c.is_normal     = r.head.size() <= 1;
    c.is_unary      = c.is_fact || (r.head.size() == 1 && r.pos.size() == 1 && r.neg.empty());
    return c;
}

Program::Program(std::vector<Rule> rules) {
    rules_.reserve(rules.size());
    for (const Rule& r : rules) add(r);
}

bool Program::add(const Rule& r) {
    universe_ |= r.atoms();
    if (contains(r)) return false;
    rules_.push_back(r);
    return true;
}

void Program::add_all(const Program& other) {
    for (const Rule& r : other.rules_) add(r);
    universe_ |= other.universe_;
}

bool Program::contains(const Rule& r) const { return std::find(rules_.begin(), rules_.end(), r) != rules_.end(); }

AtomSet Program::heads() const {
    AtomSet s;
    for (const Rule& r : rules_) s |= r.head;
    return s;
}

AtomSet Program::bodies() const {
    AtomSet s;
    for (const Rule& r : rules_) s |= r.body();
    return s;
}

AtomSet Program::atoms() const {
    AtomSet s;
    for (const Rule& r : rules_) s |= r.atoms();
    return s;
}

AtomSet Program::negated() const {
    AtomSet s;
    for (const Rule& r : rules_) s |= r.neg;
    return s;
}

bool Program::is_positive() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.neg.empty(); });
}

bool Program::is_normal() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.head.size() <= 1; });
}

bool Program::is_unary() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return classify_rule(r).is_unary; });
}

bool Program::same_rules(const Program& other) const {
    if (rules_.size() != other.rules_.size()) return false;
    return std::all_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return other.contains(r); });
}

bool in_class(const Program& p, const AlphabetPair& ab) {
    return p.heads().subset_of(ab.heads) && p.bodies().subset_of(ab.bodies);
}

SymbolSets symbol_sets(const Program& p) {
    SymbolSets s;
    s.heads  = p.heads();
    s.bodies = p.bodies();
    s.atoms  = s.heads | s.bodies;
    return s;
}

// Printing

std::string render_rule(const Rule& r, const Workspace& ws) {
    std::string out;
    bool first = true;
    for (AtomId a : r.head) {
        if (!first) out += " | ";
        out += ws.name(a);
        first = false;
    }
    if (!r.body().empty()) {
        out += out.empty() ? ":- " : " :- ";
        first = true;
        for (AtomId a : r.pos) {
            if (!first) out += ", ";
            out += ws.name(a);
            first = false;
        }
        for (AtomId a : r.neg) {
            if (!first) out += ", ";
            out += "not ";
            out += ws.name(a);
            first = false;
        }
    }
    return out + ".";
}

std::string render_program(const Program& p, const Workspace& ws) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += render_rule(r, ws);
        out += '\n';
    }
    return out;
}

// Parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, Workspace& ws) : text_(text), ws_(ws) {}

    Program run() {
        Program p;
        for (skip_space(); !at_end(); skip_space()) p.add(parse_rule());
        return p;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end()) {
            char c = peek();
            if (c == '%') {
                while (!at_end() && peek() != '\n') advance();
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t line, std::size_t col) const {
        throw ParseError(line, col, msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, line_, col_); }

    bool match(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        for (std::size_t i = 0; i < tok.size(); ++i) advance();
        return true;
    }

    [[nodiscard]] bool at_identifier() const { return std::islower(static_cast<unsigned char>(peek())) != 0; }

    std::string_view identifier() {
        skip_space();
        if (!at_identifier()) {
            if (at_end()) fail("unexpected end of input, atom expected");
            fail(std::string("unexpected '") + peek() + "', atom expected");
        }
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
        return text_.substr(start, pos_ - start);
    }

    AtomId atom() {
        skip_space();
        std::size_t line = line_, col = col_;
        std::string_view id = identifier();
        if (id == "not") fail("'not' is reserved and cannot be used as an atom", line, col);
        return ws_.intern(id);
    }

    Rule parse_rule() {
        std::size_t line = line_, col = col_;
        Rule r;
        if (at_identifier()) {
            r.head.insert(atom());
            while (match("|")) r.head.insert(atom());
        }
        if (match(":-")) {
            do {
                skip_space();
                std::size_t save_pos = pos_, save_line = line_, save_col = col_;
                std::string_view id = identifier();
                if (id == "not") {
                    r.neg.insert(atom());
                }
                else {
                    pos_  = save_pos;
                    line_ = save_line;
                    col_  = save_col;
                    r.pos.insert(atom());
                }
            } while (match(","));
        }
        if (!match(".")) {
            skip_space();
            if (at_end()) fail("unexpected end of input, '.' expected");
            fail(std::string("unexpected '") + peek() + "', '.' expected");
        }
        if (r.empty()) throw EmptyRuleError(line, col, "rule has neither head nor body");
        return r;
    }

    std::string_view text_;
    Workspace&       ws_;
    std::size_t      pos_  = 0;
    std::size_t      line_ = 1;
    std::size_t      col_  = 1;
};

} // namespace

Program parse_program(std::string_view text, Workspace& ws) { return Parser(text, ws).run(); }

} // namespace hbeq
