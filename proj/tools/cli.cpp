/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cli.h"

#include <hbeq/decision.h>
#include <hbeq/error.h>
#include <hbeq/reduction.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hbeq::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kSchemaId = "hbeq.report/1";

/// Bad flags or arguments detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AlphabetOptions {
    std::optional<std::string> heads;
    std::optional<std::string> bodies;
    std::optional<std::string> rel_strong;
    std::optional<std::string> rel_uniform;
    bool                       strong   = false;
    bool                       uniform  = false;
    bool                       ordinary = false;
};

struct CommonOptions {
    std::vector<std::string> files;
    std::string              universe;
    bool                     json = false;
    AlphabetOptions          alphabet;
};

struct ResolvedAlphabet {
    AlphabetPair pair;
    std::string  preset;
};

/// Parsed inputs sharing one workspace.
struct Session {
    Workspace            ws;
    std::vector<Program> programs;
    AtomSet              universe;
};

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void load(Session& s, const CommonOptions& opts) {
    for (const std::string& path : opts.files) {
        try {
            s.programs.push_back(parse_program(read_file(path), s.ws));
        }
        catch (const ParseError& e) {
            throw UsageError(path + ":" + e.what());
        }
        s.universe |= s.programs.back().atoms();
    }
    for (const std::string& name : split_list(opts.universe)) {
        try {
            s.universe.insert(s.ws.intern(name));
        }
        catch (const LimitError&) {
            throw;
        }
        catch (const Error& e) {
            throw UsageError(std::string("--universe: ") + e.what());
        }
    }
}

AtomSet resolve_list(const std::string& list, const Session& s, const char* flag, std::ostream& err) {
    if (list == "all") return s.universe;
    if (list == "none") return {};
    AtomSet out;
    for (const std::string& name : split_list(list)) {
        auto id = s.ws.find(name);
        if (id && s.universe.contains(*id)) {
            out.insert(*id);
        }
        else {
            err << "warning: " << flag << ": atom '" << name
                << "' is not in the universe and is ignored (use --universe to add it)\n";
        }
    }
    return out;
}

ResolvedAlphabet resolve_alphabet(const AlphabetOptions& o, const Session& s, std::ostream& err) {
    const int presets = int(o.strong) + int(o.uniform) + int(o.ordinary) + int(o.rel_strong.has_value())
                      + int(o.rel_uniform.has_value());
    const bool explicit_lists = o.heads || o.bodies;
    if (presets > 1) throw UsageError("at most one alphabet preset may be given");
    if (presets == 1 && explicit_lists) throw UsageError("alphabet presets cannot be combined with --heads/--bodies");

    const AtomSet u = s.universe;
    if (o.uniform) return {{u, {}}, "uniform"};
    if (o.ordinary) return {{{}, u}, "ordinary"};
    if (o.rel_strong) {
        const AtomSet a = resolve_list(*o.rel_strong, s, "--rel-strong", err);
        return {{a, a}, "rel-strong"};
    }
    if (o.rel_uniform) return {{resolve_list(*o.rel_uniform, s, "--rel-uniform", err), {}}, "rel-uniform"};
    if (explicit_lists) {
        // an omitted list keeps the --strong default
        const AtomSet h = o.heads ? resolve_list(*o.heads, s, "--heads", err) : u;
        const AtomSet b = o.bodies ? resolve_list(*o.bodies, s, "--bodies", err) : u;
        return {{h, b}, "explicit"};
    }
    return {{u, u}, "strong"};
}

std::uint64_t budget_from_env() {
    const char* env = std::getenv("HBEQ_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("HBEQ_BUDGET must be a positive integer");
    return v;
}

// Report helpers

json atoms_json(const Workspace& ws, AtomSet s) { return ws.names(s); }

json alphabet_json(const Workspace& ws, const ResolvedAlphabet& a) {
    return {{"heads", atoms_json(ws, a.pair.heads)}, {"bodies", atoms_json(ws, a.pair.bodies)}, {"preset", a.preset}};
}

const char* direction_name(Containment c) {
    return c == Containment::left_in_right ? "left-in-right" : "right-in-left";
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string pair_text(const Workspace& ws, const ModelPair& m) {
    return "(" + ws.format(m.x) + ", " + ws.format(m.y) + ")";
}

std::string indent(const std::string& text) {
    if (text.empty()) return "  (empty program)\n";
    std::string out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out += "  " + line + "\n";
    return out;
}

json base_report(const std::string& command, const CommonOptions& opts, const Session& s) {
    json r;
    r["schema_id"] = kSchemaId;
    r["command"]   = command;
    r["inputs"]    = opts.files;
    r["universe"]  = atoms_json(s.ws, s.universe);
    return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Commands

struct CheckOptions {
    bool oracle = false;
    bool verify = false;
};

/// Re-parses the rendered counterexample and re-checks the separation.
bool revalidate(Session& s, const Program& p, const Program& q, const Counterexample& c) {
    const Program r = parse_program(render_program(c.context, s.ws), s.ws);
    if (!r.same_rules(c.context)) return false;
    const bool left  = answer_sets(p | r, s.universe).contains(c.distinguishing);
    const bool right = answer_sets(q | r, s.universe).contains(c.distinguishing);
    return left != right && left == (c.side == Side::left);
}

int cmd_check(const CommonOptions& opts, const CheckOptions& co, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Session s;
    load(s, opts);
    const ResolvedAlphabet a = resolve_alphabet(opts.alphabet, s, err);
    const Program& p = s.programs[0];
    const Program& q = s.programs[1];
    const std::uint64_t budget = budget_from_env();

    auto run_oracle = [&] { return oracle_equivalence(p, q, a.pair, s.universe, budget); };
    auto run_sigma  = [&] { return decide_equivalence(p, q, a.pair, s.universe); };
    const Verdict v = co.oracle ? run_oracle() : run_sigma();
    std::optional<Verdict> second;
    if (co.verify) second = co.oracle ? run_sigma() : run_oracle();

    json r = base_report("check", opts, s);
    r["alphabet"]   = alphabet_json(s.ws, a);
    r["equivalent"] = v.equivalent;
    r["method"]     = method_name(v.method);
    if (v.witness) {
        r["witness"] = {{"x", atoms_json(s.ws, v.witness->x)},
                        {"y", atoms_json(s.ws, v.witness->y)},
                        {"direction", direction_name(v.witness->direction)}};
    }
    if (v.counterexample) {
        r["counterexample"] = {{"context", render_program(v.counterexample->context, s.ws)},
                               {"distinguishing", atoms_json(s.ws, v.counterexample->distinguishing)},
                               {"side", side_name(v.counterexample->side)}};
    }
    if (second) {
        r["verification"] = {{"method", method_name(second->method)},
                             {"equivalent", second->equivalent},
                             {"agrees", second->equivalent == v.equivalent}};
    }
    r["timing_ms"] = elapsed_ms(start);

    if (opts.json) {
        out << r.dump(2) << '\n';
    }
    else {
        out << "alphabet: H = " << s.ws.format(a.pair.heads) << ", B = " << s.ws.format(a.pair.bodies) << " ("
            << a.preset << ")\n";
        out << "universe: " << s.ws.format(s.universe) << '\n';
        out << "verdict: " << (v.equivalent ? "equivalent" : "not equivalent") << " (" << method_name(v.method)
            << ")\n";
        if (v.witness) {
            out << "witness: " << pair_text(s.ws, {v.witness->x, v.witness->y}) << " against "
                << (v.witness->direction == Containment::left_in_right ? "left in right" : "right in left") << '\n';
        }
        if (v.counterexample) {
            const Counterexample& c = *v.counterexample;
            out << "counterexample context:\n" << indent(render_program(c.context, s.ws));
            out << "distinguishing interpretation: " << s.ws.format(c.distinguishing) << " is an answer set of the "
                << side_name(c.side) << " program only\n";
        }
        if (second)
            out << "verification (" << method_name(second->method)
                << "): " << (second->equivalent == v.equivalent ? "agrees" : "DISAGREES") << '\n';
    }

    if (second && second->equivalent != v.equivalent) {
        err << "error: " << method_name(v.method) << " and " << method_name(second->method) << " disagree\n";
        return kNoVerdict;
    }
    if (v.equivalent) return kEquivalent;
    if (!v.counterexample || !revalidate(s, p, q, *v.counterexample)) {
        err << "error: the counterexample failed re-validation\n";
        return kNoVerdict;
    }
    return kNotEquivalent;
}

int cmd_models(const CommonOptions& opts, const std::string& family, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Session s;
    load(s, opts);
    const ResolvedAlphabet a = resolve_alphabet(opts.alphabet, s, err);
    const Program& p = s.programs[0];

    json r = base_report("models", opts, s);
    r["family"] = family;
    std::string text;
    if (family == "answer-sets") {
        const AnswerSetFamily as = answer_sets(p, s.universe);
        json sets = json::array();
        for (Interpretation y : as) {
            sets.push_back(atoms_json(s.ws, y));
            text += s.ws.format(y) + "\n";
        }
        r["answer_sets"] = sets;
        r["count"]       = as.size();
    }
    else {
        Characterization c;
        if (family == "hb") c = hb_models(p, a.pair, s.universe);
        else if (family == "se") c = se_models(p, s.universe);
        else if (family == "ue") c = ue_models(p, s.universe);
        else if (family == "rel-se") c = rel_se_models(p, a.pair.heads, s.universe);
        else c = rel_ue_models(p, a.pair.heads, s.universe);

        if (family == "hb" || family == "rel-se" || family == "rel-ue") {
            r["alphabet"] = alphabet_json(s.ws, {c.alphabet(), a.preset});
            text += "alphabet: H = " + s.ws.format(c.alphabet().heads) + ", B = " + s.ws.format(c.alphabet().bodies)
                  + "\n";
        }
        json pairs = json::array();
        for (const ModelPair& m : c.pairs()) {
            pairs.push_back({{"x", atoms_json(s.ws, m.x)}, {"y", atoms_json(s.ws, m.y)}, {"total", m.total()}});
            text += pair_text(s.ws, m) + "\n";
        }
        r["pairs"] = pairs;
        r["count"] = c.size();
    }
    r["timing_ms"] = elapsed_ms(start);

    if (opts.json) out << r.dump(2) << '\n';
    else out << text;
    return kEquivalent;
}

struct ReduceOptions {
    std::string mode = "disjunctive";
    std::string output;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
    if (!f) throw UsageError("error writing '" + path + "'");
}

int cmd_reduce(const CommonOptions& opts, const ReduceOptions& ro, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Session s;
    load(s, opts);
    const ResolvedAlphabet a = resolve_alphabet(opts.alphabet, s, err);
    const ReductionMode mode = ro.mode == "normal" ? ReductionMode::normal : ReductionMode::disjunctive;
    const ReductionOutput red = reduce_to_ordinary(s.programs[0], s.programs[1], a.pair, s.ws, mode);

    const std::string left  = render_program(red.left, s.ws);
    const std::string right = render_program(red.right, s.ws);
    std::vector<std::string> written;
    if (!ro.output.empty()) {
        written = {ro.output + ".left.lp", ro.output + ".right.lp"};
        write_file(written[0], left);
        write_file(written[1], right);
    }

    json r = base_report("reduce", opts, s);
    r["alphabet"]  = alphabet_json(s.ws, a);
    r["mode"]      = mode_name(mode);
    r["fresh"]     = atoms_json(s.ws, red.fresh);
    r["guess"]     = render_program(red.guess, s.ws);
    r["left"]      = left;
    r["right"]     = right;
    r["outputs"]   = written;
    r["timing_ms"] = elapsed_ms(start);

    if (opts.json) {
        out << r.dump(2) << '\n';
    }
    else {
        out << "mode: " << mode_name(mode) << '\n';
        out << "fresh atoms: " << s.ws.format(red.fresh) << '\n';
        out << "guess program:\n" << indent(render_program(red.guess, s.ws));
        if (written.empty()) {
            out << "left program:\n" << indent(left) << "right program:\n" << indent(right);
        }
        else {
            out << "wrote " << written[0] << " and " << written[1] << '\n';
        }
    }
    return kEquivalent;
}

int cmd_lattice(const CommonOptions& opts, std::ostream& out, std::ostream&) {
    const auto start = std::chrono::steady_clock::now();
    Session s;
    load(s, opts);
    const LatticeReport lr = equivalence_lattice(s.programs[0], s.programs[1], s.universe, budget_from_env());
    const AtomSet u = s.universe;

    auto corner = [&](const AlphabetPair& ab) -> std::string {
        if (ab == AlphabetPair{{}, u}) return "ordinary";
        if (ab == AlphabetPair{u, {}}) return "uniform";
        if (ab == AlphabetPair{u, u}) return "strong";
        if (ab == AlphabetPair{{}, {}}) return "empty-context";
        return "";
    };

    // antitone: equivalence for (H, B) carries over to every (H', B') below it
    bool antitone = true;
    for (const LatticeEntry& big : lr.entries)
        for (const LatticeEntry& small : lr.entries)
            if (big.equivalent && small.alphabet.heads.subset_of(big.alphabet.heads)
                && small.alphabet.bodies.subset_of(big.alphabet.bodies) && !small.equivalent)
                antitone = false;

    json r = base_report("lattice", opts, s);
    json entries = json::array();
    for (const LatticeEntry& e : lr.entries) {
        json j = {{"heads", atoms_json(s.ws, e.alphabet.heads)},
                  {"bodies", atoms_json(s.ws, e.alphabet.bodies)},
                  {"equivalent", e.equivalent}};
        if (auto c = corner(e.alphabet); !c.empty()) j["corner"] = c;
        entries.push_back(j);
    }
    r["entries"]   = entries;
    r["corners"]   = {{"ordinary", lr.ordinary}, {"uniform", lr.uniform}, {"strong", lr.strong}};
    r["antitone"]  = antitone;
    r["timing_ms"] = elapsed_ms(start);

    if (opts.json) {
        out << r.dump(2) << '\n';
        return kEquivalent;
    }
    std::size_t width = 1;
    for (const LatticeEntry& e : lr.entries) width = std::max(width, s.ws.format(e.alphabet.heads).size());
    auto pad = [&](std::string t) {
        t.resize(std::max(t.size(), width) + 2, ' ');
        return t;
    };
    out << pad("H") << pad("B") << "equivalent\n";
    for (const LatticeEntry& e : lr.entries) {
        std::string line = pad(s.ws.format(e.alphabet.heads)) + pad(s.ws.format(e.alphabet.bodies))
                         + (e.equivalent ? "yes" : "no ");
        if (auto c = corner(e.alphabet); !c.empty()) line += "  <- " + c;
        while (line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    out << "corners: ordinary " << (lr.ordinary ? "yes" : "no") << ", uniform " << (lr.uniform ? "yes" : "no")
        << ", strong " << (lr.strong ? "yes" : "no") << '\n';
    out << "antitone: " << (antitone ? "yes" : "no") << '\n';
    return kEquivalent;
}

void add_alphabet_flags(CLI::App* sub, AlphabetOptions& a) {
    sub->add_option("--heads", a.heads, "Head alphabet H: comma list, 'all' or 'none'");
    sub->add_option("--bodies", a.bodies, "Body alphabet B: comma list, 'all' or 'none'");
    sub->add_flag("--strong", a.strong, "H = B = U (default)");
    sub->add_flag("--uniform", a.uniform, "H = U, B = {}");
    sub->add_flag("--ordinary", a.ordinary, "H = {}, B = U");
    sub->add_option("--rel-strong", a.rel_strong, "H = B = A (relativized strong)");
    sub->add_option("--rel-uniform", a.rel_uniform, "H = A, B = {} (relativized uniform)");
}

void add_common_flags(CLI::App* sub, CommonOptions& c) {
    sub->add_option("--universe", c.universe, "Extra atoms added to the universe (comma list)");
    sub->add_flag("--json", c.json, "Emit a JSON report");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide <H,B>-equivalence of propositional disjunctive logic programs", "hbeq"};
    app.require_subcommand(1);

    CommonOptions check_opts, models_opts, reduce_opts, lattice_opts;
    CheckOptions  check_flags;
    ReduceOptions reduce_flags;
    std::string   family = "hb";

    CLI::App* check = app.add_subcommand("check", "Decide <H,B>-equivalence of two programs");
    check->add_option("left", check_opts.files, "Program files P and Q")->required()->expected(2);
    add_alphabet_flags(check, check_opts.alphabet);
    add_common_flags(check, check_opts);
    check->add_flag("--oracle", check_flags.oracle, "Decide by enumerating all unary contexts");
    check->add_flag("--verify", check_flags.verify, "Run both methods and fail if they disagree");

    CLI::App* models = app.add_subcommand("models", "List the models characterizing a program");
    models->add_option("program", models_opts.files, "Program file")->required()->expected(1);
    add_alphabet_flags(models, models_opts.alphabet);
    add_common_flags(models, models_opts);
    models->add_option("--family", family, "Which characterization")
        ->check(CLI::IsMember({"hb", "se", "ue", "rel-se", "rel-ue", "answer-sets"}));

    CLI::App* reduce = app.add_subcommand("reduce", "Compile to an ordinary-equivalence problem");
    reduce->add_option("programs", reduce_opts.files, "Program files P and Q")->required()->expected(2);
    add_alphabet_flags(reduce, reduce_opts.alphabet);
    add_common_flags(reduce, reduce_opts);
    reduce->add_option("--mode", reduce_flags.mode, "Guess encoding")
        ->check(CLI::IsMember({"disjunctive", "normal"}));
    reduce->add_option("--output", reduce_flags.output, "Write <prefix>.left.lp and <prefix>.right.lp");

    CLI::App* lattice = app.add_subcommand("lattice", "Verdicts for every alphabet pair over the universe");
    lattice->add_option("programs", lattice_opts.files, "Program files P and Q")->required()->expected(2);
    add_common_flags(lattice, lattice_opts);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kEquivalent : kNoVerdict;
    }

    try {
        if (*check) return cmd_check(check_opts, check_flags, out, err);
        if (*models) return cmd_models(models_opts, family, out, err);
        if (*reduce) return cmd_reduce(reduce_opts, reduce_flags, out, err);
        return cmd_lattice(lattice_opts, out, err);
    }
    catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise HBEQ_BUDGET or use a smaller universe)\n";
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kNoVerdict;
}

} // namespace hbeq::cli
