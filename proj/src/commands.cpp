#include "parabraid/commands.hpp"

#include "parabraid/green.hpp"
#include "parabraid/schur.hpp"
#include "parabraid/spec_io.hpp"

#include "json.hpp"

#include <sstream>

namespace parabraid {

namespace {

using nlohmann::ordered_json;

Error usage(const std::string& msg) { return Error("cli.usage", msg); }

Grade parse_grade_text(const std::string& text, const GradeGroup& group) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '(' && c != ')') s += c;
    }
    Grade g;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            g.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw usage("cannot read grade '" + text + "'");
        }
    }
    if (!group.contains(g)) throw usage("grade '" + text + "' is not in the grading group");
    return g;
}

Signs variant_of(const std::string& s) {
    if (s == "alt") return Signs::alt;
    if (s == "sym") return Signs::sym;
    throw usage("variant must be alt or sym");
}

Side side_of(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw usage("side must be left or right");
}

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

Execution execution_for(const CommandArgs& args, const ArtifactSpec& spec) {
    return Execution{args.threads.value_or(spec.options.threads)};
}

std::map<std::string, std::string> header(const std::string& command, const ArtifactSpec& spec) {
    return {{"command", command}, {"spec", spec.name}, {"tool", "parabraid"}};
}

CommandResult report_result(const Report& rep, const std::string& command, const ArtifactSpec& spec,
                            OutputFormat fmt) {
    CommandResult r;
    r.out = fmt == OutputFormat::text ? rep.to_text() : rep.to_jsonl(header(command, spec));
    r.exit_code = rep.has_unexpected_failure() ? 1 : 0;
    return r;
}

Report guarded(const std::string& check, const std::function<Report()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        if (e.code().rfind("ternary.not-closed", 0) != 0) throw;
        Report rep;
        rep.add({check, "bracket closure", Status::fail, e.what(), e.code()});
        return rep;
    }
}

CommandResult run_check(const CommandArgs& args, const ArtifactSpec& spec) {
    const Execution exec = execution_for(args, spec);
    Report rep;
    rep.append(check_unitarity(spec.braiding, exec));
    rep.append(check_yang_baxter(spec.braiding, exec));
    for (Side side : {Side::left, Side::right}) rep.append(check_symmetrizer_bracket(spec.braiding, side, exec));
    for (Signs s : spec.options.variants) {
        if (!spec.braiding.is_diagonal()) break;
        for (Side side : {Side::left, Side::right}) {
            const BracketVariant v{side, s};
            rep.append(check_symmetry(v, spec.braiding, exec));
            rep.append(check_cyclic(v, spec.braiding, exec));
            if (spec.options.derivation) rep.append(check_derivation(v, spec.braiding, exec, spec.options.sweep));
        }
    }
    if (spec.species) {
        rep.append(check_claims(*spec.species, spec.claims));
        if (spec.options.jacobi) {
            for (Side side : {Side::left, Side::right}) {
                rep.append(guarded("jacobi-" + side_name(side), [&] {
                    return check_realized_jacobi(*spec.species, side, exec, spec.options.sweep);
                }));
            }
        }
    }
    return report_result(rep, "check", spec, args.format == OutputFormat::automatic ? OutputFormat::jsonl : args.format);
}

CommandResult run_bracket(const CommandArgs& args, const ArtifactSpec& spec) {
    if (args.operands.size() != 3) throw usage("bracket needs exactly three generator ids");
    const BracketVariant v{side_of(args.side), variant_of(args.variant)};
    Element value = [&] {
        if (spec.species) {
            const auto& sp = *spec.species;
            Element a = sp.generator(args.operands[0]);
            Element b = sp.generator(args.operands[1]);
            Element c = sp.generator(args.operands[2]);
            if (args.tensor) return bracket_by_phases(v, sp.grading(), a, b, c);
            if (v.signs != Signs::alt) throw usage("the Q-realized bracket exists for the alt variant only; add --tensor");
            return bracket_via_q(v.side, sp, a, b, c);
        }
        const auto& bs = spec.braiding.basis_spec();
        Element a = Element::generator(bs, args.operands[0]);
        Element b = Element::generator(bs, args.operands[1]);
        Element c = Element::generator(bs, args.operands[2]);
        return ternary_bracket(v, spec.braiding, a, b, c);
    }();
    CommandResult r;
    if (args.format == OutputFormat::jsonl) {
        ordered_json j;
        j["schema"] = "1";
        j["command"] = "bracket";
        j["spec"] = spec.name;
        j["variant"] = v.name();
        j["realized"] = spec.species.has_value() && !args.tensor;
        j["operands"] = args.operands;
        j["value"] = value.str();
        r.out = j.dump() + "\n";
    } else {
        r.out = value.str() + "\n";
    }
    return r;
}

CommandResult run_table(const CommandArgs& args, const ArtifactSpec& spec) {
    if (!spec.species) throw Error("cli.requires-species", "table needs a species block");
    const Execution exec = execution_for(args, spec);
    std::vector<Side> sides;
    if (args.side == "both") sides = {Side::left, Side::right};
    else sides = {side_of(args.side)};
    std::vector<RelationRow> rows;
    for (Side s : sides) {
        auto part = relation_table(*spec.species, s, exec);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    Report claims = check_claims(*spec.species, spec.claims);
    CommandResult r;
    if (args.format == OutputFormat::text) {
        r.out = relation_table_text(rows);
        if (!spec.claims.empty()) r.out += "\n" + claims.to_text();
    } else {
        ordered_json head;
        head["schema"] = "1";
        for (const auto& [k, v] : header("table", spec)) head[k] = v;
        r.out = head.dump() + "\n" + relation_table_jsonl(rows);
        for (const auto& v : claims.verdicts()) {
            ordered_json j;
            j["check"] = v.check;
            j["subject"] = v.subject;
            j["status"] = status_name(v.status);
            if (!v.witness.empty()) j["computed"] = v.witness;
            if (!v.note.empty()) j["note"] = v.note;
            r.out += j.dump() + "\n";
        }
    }
    r.exit_code = claims.has_unexpected_failure() ? 1 : 0;
    return r;
}

CommandResult run_schur(const CommandArgs& args, const ArtifactSpec& spec) {
    const Side which = side_of(args.which);
    const Braiding& psi = spec.braiding;
    std::vector<std::vector<Grade>> triples;
    if (!args.grades.empty()) {
        if (args.grades.size() != 3) throw usage("schur --grades needs three grades");
        std::vector<Grade> t;
        for (const auto& g : args.grades) t.push_back(parse_grade_text(g, spec.grading.group()));
        triples.push_back(t);
    } else {
        triples = grade_tuples(psi.grades(), 3);
    }
    const Execution exec = execution_for(args, spec);
    auto entries = parallel_map<ordered_json>(exec, triples.size(), [&](std::size_t i) {
        const auto& t = triples[i];
        PermOp op = braided_symmetrizer(psi, t, which);
        OperatorMatrix m = operator_matrix(op, psi, t);
        ordered_json e;
        e["grades"] = render_grades(t);
        ordered_json perms = ordered_json::array();
        for (const auto& term : op.terms) perms.push_back(perm_name(term.perm));
        e["terms"] = perms;
        if (psi.is_diagonal()) {
            ordered_json cs = ordered_json::array();
            for (const auto& c : symmetrizer_coefficients(psi, t, which)) cs.push_back(c.str());
            e["coefficients"] = cs;
        } else {
            e["coefficients"] = nullptr;
        }
        e["space_dimension"] = m.basis.size();
        e["rank"] = operator_rank(m);
        return e;
    });
    ordered_json out;
    out["schema"] = "1";
    out["command"] = "schur";
    out["spec"] = spec.name;
    out["which"] = side_name(which);
    out["entries"] = entries;
    ordered_json checks = ordered_json::array();
    bool all_hold = true;
    for (long n : args.dims) {
        ClassicalDims d = classical_decomposition_dims(n);
        all_hold = all_hold && d.identity_holds;
        checks.push_back({{"n", n}, {"sym", d.sym}, {"alt", d.alt}, {"mixed", d.mixed}, {"identity", d.identity_holds}});
    }
    out["dims_identity_check"] = checks;
    CommandResult r;
    r.out = out.dump() + "\n";
    r.exit_code = all_hold ? 0 : 1;
    return r;
}

CommandResult run_green(const CommandArgs& args, const ArtifactSpec& spec) {
    if (!spec.species) throw Error("cli.requires-species", "green needs a species block");
    GreenOptions opts = spec.options.green;
    if (args.order) opts.order = *args.order;
    if (args.cutoff) opts.cutoff = *args.cutoff;
    if (args.modes) opts.modes = *args.modes;
    Report rep = green_ansatz_check(*spec.species, opts, execution_for(args, spec));
    return report_result(rep, "green", spec, args.format == OutputFormat::automatic ? OutputFormat::jsonl : args.format);
}

}  // namespace

CommandResult run_command(const CommandArgs& args) {
    try {
        const ArtifactSpec spec = args.spec_text ? parse_spec_text(*args.spec_text) : parse_spec_file(args.spec_path);
        if (args.command == "check") return run_check(args, spec);
        if (args.command == "bracket") return run_bracket(args, spec);
        if (args.command == "table") return run_table(args, spec);
        if (args.command == "schur") return run_schur(args, spec);
        if (args.command == "green") return run_green(args, spec);
        throw usage("unknown command '" + args.command + "'");
    } catch (const SpecError& e) {
        CommandResult r;
        r.exit_code = 2;
        for (const auto& v : e.violations()) {
            r.err += "error: " + e.code() + " at " + (v.pointer.empty() ? "/" : v.pointer) + ": " + v.message + "\n";
        }
        return r;
    } catch (const Error& e) {
        return CommandResult{2, "", "error: " + e.code() + ": " + e.what() + "\n"};
    }
}

}  // namespace parabraid
