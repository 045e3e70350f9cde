#include "parabraid/parastat.hpp"

#include "parabraid/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace parabraid {

namespace {

std::string strip_ws(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    return s;
}

// "a+" -> ("a", true)
std::pair<std::string, bool> split_dagger(const std::string& s) {
    if (!s.empty() && s.back() == '+') return {s.substr(0, s.size() - 1), true};
    return {s, false};
}

struct Symbol {
    std::string species;
    bool dagger = false;
    std::string var;
};

// "a+_i" -> species a, dagger, variable i
Symbol parse_symbol(const std::string& text) {
    auto us = text.find('_');
    if (us == std::string::npos || us == 0 || us + 1 == text.size()) {
        throw Error("parastat.claim", "malformed generator symbol '" + text + "'");
    }
    auto [name, dagger] = split_dagger(text.substr(0, us));
    return {name, dagger, text.substr(us + 1)};
}

struct ClaimTerm {
    Scalar coeff = Scalar(1);
    std::vector<std::pair<std::string, std::string>> deltas;
    std::optional<Symbol> symbol;
};

std::vector<ClaimTerm> parse_claim_value(const std::string& raw) {
    std::string text = strip_ws(raw);
    if (text.empty()) throw Error("parastat.claim", "empty claim value");
    if (text == "0") return {};
    // split into signed terms at top-level + and -
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        // a '+' directly before '_' marks a dagger, not an operator
        const bool dagger_mark = ch == '+' && i + 1 < text.size() && text[i + 1] == '_';
        const bool sign_at_boundary = depth == 0 && (ch == '+' || ch == '-') && !dagger_mark && i > 0 &&
                                      text[i - 1] != '*' && text[i - 1] != '/';
        if (sign_at_boundary) {
            parts.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    parts.push_back(cur);
    std::vector<ClaimTerm> out;
    for (auto part : parts) {
        ClaimTerm term;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
            if (part[0] == '-') term.coeff = Scalar(-1);
            part.erase(0, 1);
        }
        std::stringstream ss(part);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor.empty()) throw Error("parastat.claim", "malformed term in '" + raw + "'");
            if (factor.rfind("delta(", 0) == 0) {
                auto comma = factor.find(',');
                if (comma == std::string::npos || factor.back() != ')') {
                    throw Error("parastat.claim", "malformed delta in '" + raw + "'");
                }
                term.deltas.emplace_back(factor.substr(6, comma - 6),
                                         factor.substr(comma + 1, factor.size() - comma - 2));
            } else if (factor.find('_') != std::string::npos) {
                if (term.symbol) throw Error("parastat.claim", "two generators in one term of '" + raw + "'");
                term.symbol = parse_symbol(factor);
            } else {
                try {
                    term.coeff *= Scalar::parse(factor);
                } catch (const Error&) {
                    throw Error("parastat.claim", "malformed factor '" + factor + "' in '" + raw + "'");
                }
            }
        }
        out.push_back(std::move(term));
    }
    return out;
}

Element q_part(Side side, const SpeciesSpec& spec, Letter a, Letter b, Letter c) {
    const Grading& g = spec.grading();
    const auto& alg = spec.algebra();
    const Grade& vi = alg->generator(a).grade;
    const Grade& vj = alg->generator(b).grade;
    const Grade& vk = alg->generator(c).grade;
    const Scalar& sij = g.phase(vi, vj);
    const Scalar& sik = g.phase(vi, vk);
    const Scalar& sjk = g.phase(vj, vk);
    Element out(alg);
    auto gen = [&](Letter l, const Scalar& k) { out.add_term(Word{l}, k); };
    if (side == Side::left) {
        gen(a, spec.q(b, c));
        gen(b, sij * spec.q(a, c));
        gen(b, -(sik * sjk) * spec.q(c, a));
        gen(a, -(sij * sik * sjk) * spec.q(c, b));
    } else {
        gen(c, spec.q(a, b));
        gen(b, sjk * spec.q(a, c));
        gen(b, -(sij * sik) * spec.q(c, a));
        gen(c, -(sjk * sij * sik) * spec.q(b, a));
    }
    return out;
}

struct LinearTerm {
    Letter letter;
    Scalar coeff;
};

std::vector<LinearTerm> span_terms(const Element& x) {
    std::vector<LinearTerm> out;
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != 1) throw Error("parastat.span", "argument " + x.str() + " is outside the generator span");
        out.push_back({w[0], c});
    }
    return out;
}

std::string render_pair(const std::string& open, const std::string& close, const std::string& x,
                        const std::string& y, const Scalar& q) {
    std::string out = open + x + "," + y + close;
    if (!q.is_one() && q != Scalar(-1)) out += "_(" + q.str() + ")";
    return out;
}

// inner sum x y + s y x, rendered as {x,y} for s = 1 and [x,y] for s = -1
std::string render_plus(const std::string& x, const std::string& y, const Scalar& s) {
    if (s == Scalar(-1)) return render_pair("[", "]", x, y, s);
    return render_pair("{", "}", x, y, s);
}

// outer difference x y - t y x, rendered as [x,y] for t = 1 and {x,y} for t = -1
std::string render_minus(const std::string& x, const std::string& y, const Scalar& t) {
    if (t == Scalar(-1)) return render_pair("{", "}", x, y, t);
    return render_pair("[", "]", x, y, t);
}

}  // namespace

QRule parse_q_rule(const std::string& left, const std::string& right, const std::string& value) {
    QRule r{left, right, Scalar(1), true};
    std::string v = strip_ws(value);
    if (v == "delta") return r;
    if (v == "-delta") {
        r.coeff = Scalar(-1);
        return r;
    }
    const std::string suffix = "*delta";
    if (v.size() > suffix.size() && v.compare(v.size() - suffix.size(), suffix.size(), suffix) == 0) {
        r.coeff = Scalar::parse(v.substr(0, v.size() - suffix.size()));
        return r;
    }
    r.delta = false;
    r.coeff = Scalar::parse(v);
    return r;
}

std::string species_generator_id(const std::string& name, int mode, bool dagger) {
    return name + std::to_string(mode) + (dagger ? "+" : "");
}

SpeciesSpec::SpeciesSpec(Grading grading, std::vector<SpeciesBlock> species, std::vector<QRule> rules)
    : grading_(std::move(grading)), species_(std::move(species)) {
    std::vector<Generator> gens;
    std::map<std::string, bool> seen;
    for (const auto& s : species_) {
        if (s.name.empty() || s.name.find_first_of("+_ ") != std::string::npos) {
            throw Error("parastat.species", "invalid species name '" + s.name + "'");
        }
        if (!seen.emplace(s.name, true).second) throw Error("parastat.species", "duplicate species '" + s.name + "'");
        if (s.modes < 1) throw Error("parastat.species", "species '" + s.name + "' needs at least one mode");
        grading_.group().validate(s.grade);
        for (int m = 1; m <= s.modes; ++m) {
            for (bool dag : {false, true}) {
                if (dag && !s.daggers) continue;
                gens.push_back(Generator{species_generator_id(s.name, m, dag), s.grade, SpeciesTag{s.name, dag, m},
                                         static_cast<int>(gens.size())});
            }
        }
    }
    algebra_ = std::make_shared<const AlgebraSpec>(grading_.group(), std::move(gens));

    // explicit entries first, then counterparts forced by Q(b,a) = -phase(b,a) Q(a,b)
    std::map<std::pair<Letter, Letter>, Scalar> explicit_entries;
    for (const auto& r : rules) {
        auto [ln, ld] = split_dagger(r.left);
        auto [rn, rd] = split_dagger(r.right);
        const SpeciesBlock& lb = block(ln);
        const SpeciesBlock& rb = block(rn);
        if ((ld && !lb.daggers) || (rd && !rb.daggers)) {
            throw Error("parastat.invalid-form", "pairing uses a dagger of a species without daggers");
        }
        for (int i = 1; i <= lb.modes; ++i) {
            for (int j = 1; j <= rb.modes; ++j) {
                Scalar v = r.delta ? (i == j ? r.coeff : Scalar(0)) : r.coeff;
                Letter x = algebra_->letter(species_generator_id(ln, i, ld));
                Letter y = algebra_->letter(species_generator_id(rn, j, rd));
                auto [it, inserted] = explicit_entries.try_emplace({x, y}, v);
                if (!inserted && !(it->second == v)) {
                    throw Error("parastat.invalid-form", "conflicting values for Q(" + algebra_->generator(x).id + "," +
                                                             algebra_->generator(y).id + ")");
                }
            }
        }
    }
    for (const auto& [key, v] : explicit_entries) {
        auto [x, y] = key;
        const Grade& gx = algebra_->generator(x).grade;
        const Grade& gy = algebra_->generator(y).grade;
        Scalar forced = -grading_.phase(gy, gx) * v;
        auto other = explicit_entries.find({y, x});
        if (other != explicit_entries.end() && !(other->second == forced)) {
            throw Error("parastat.invalid-form",
                        "Q(" + algebra_->generator(y).id + "," + algebra_->generator(x).id + ") = " + other->second.str() +
                            " contradicts the graded symmetry of Q, which forces " + forced.str());
        }
        // an entry consistent with itself under the swap needs phase(x,y) phase(y,x) = 1
        if (!v.is_zero() && !(-grading_.phase(gx, gy) * forced == v)) {
            throw Error("parastat.invalid-form", "pairing " + algebra_->generator(x).id + "," + algebra_->generator(y).id +
                                                     " cannot satisfy the graded symmetry of Q for these grades");
        }
        if (!v.is_zero()) table_[{x, y}] = v;
        if (!forced.is_zero()) table_[{y, x}] = forced;
    }
}

const SpeciesBlock& SpeciesSpec::block(const std::string& name) const {
    for (const auto& s : species_) {
        if (s.name == name) return s;
    }
    throw Error("parastat.species", "unknown species '" + name + "'");
}

Scalar SpeciesSpec::q(Letter x, Letter y) const {
    auto it = table_.find({x, y});
    return it == table_.end() ? Scalar(0) : it->second;
}

Scalar SpeciesSpec::q(const std::string& x, const std::string& y) const {
    return q(algebra_->letter(x), algebra_->letter(y));
}

Element bracket_via_q(Side side, const SpeciesSpec& spec, const Element& a, const Element& b, const Element& c) {
    Element out(spec.algebra());
    for (const auto& ta : span_terms(a))
        for (const auto& tb : span_terms(b))
            for (const auto& tc : span_terms(c))
                out += q_part(side, spec, ta.letter, tb.letter, tc.letter).scaled(ta.coeff * tb.coeff * tc.coeff);
    return out;
}

Element ideal_generator(Side side, const SpeciesSpec& spec, const Element& a, const Element& b, const Element& c) {
    BracketVariant v{side, Signs::alt};
    return bracket_by_phases(v, spec.grading(), a, b, c) - bracket_via_q(side, spec, a, b, c);
}

std::string commutator_form(Side side, const Grading& g, const std::vector<Grade>& gr,
                            const std::vector<std::string>& n) {
    const auto& group = g.group();
    if (side == Side::left) {
        std::string inner = render_plus(n[0], n[1], g.phase(gr[0], gr[1]));
        return render_minus(inner, n[2], g.twist(group.add(gr[0], gr[1]), gr[2]));
    }
    std::string inner = render_plus(n[1], n[2], g.phase(gr[1], gr[2]));
    return render_minus(n[0], inner, g.twist(gr[0], group.add(gr[1], gr[2])));
}

std::vector<RelationRow> relation_table(const SpeciesSpec& spec, Side side, const Execution& exec) {
    const auto& alg = spec.algebra();
    const std::size_t n = alg->size();
    auto rows = parallel_map<std::optional<RelationRow>>(exec, n * n * n, [&](std::size_t idx) {
        Letter l[3] = {static_cast<Letter>(idx / (n * n)), static_cast<Letter>((idx / n) % n), static_cast<Letter>(idx % n)};
        std::vector<std::string> ids;
        std::vector<Grade> grades;
        std::vector<Element> args;
        for (Letter x : l) {
            ids.push_back(alg->generator(x).id);
            grades.push_back(alg->generator(x).grade);
            args.push_back(Element::word(alg, Word{x}));
        }
        return std::optional<RelationRow>(RelationRow{ids, side, bracket_via_q(side, spec, args[0], args[1], args[2]),
                                                      commutator_form(side, spec.grading(), grades, ids)});
    });
    std::vector<RelationRow> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(*r));
    return out;
}

std::string relation_table_jsonl(const std::vector<RelationRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["side"] = r.side == Side::left ? "left" : "right";
        j["triple"] = r.triple;
        j["value"] = r.value.str();
        j["form"] = r.form;
        out << j.dump() << '\n';
    }
    return out.str();
}

std::string relation_table_text(const std::vector<RelationRow>& rows) {
    std::vector<std::string> lhs;
    std::size_t wl = 0, wf = 0;
    for (const auto& r : rows) {
        const char* tag = r.side == Side::left ? "_1" : "_2";
        lhs.push_back("<" + r.triple[0] + ", " + r.triple[1] + ", " + r.triple[2] + ">" + tag);
        wl = std::max(wl, lhs.back().size());
        wf = std::max(wf, r.form.size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << lhs[i] << std::string(wl - lhs[i].size(), ' ') << " = " << rows[i].form
            << std::string(wf - rows[i].form.size(), ' ') << " = " << rows[i].value.str() << '\n';
    }
    return out.str();
}

Report check_claims(const SpeciesSpec& spec, const std::vector<Claim>& claims) {
    Report report;
    const auto& alg = spec.algebra();
    for (const auto& claim : claims) {
        if (claim.triple.size() != 3) throw Error("parastat.claim", "claim '" + claim.label + "' needs three generators");
        std::vector<Symbol> syms;
        std::map<std::string, int> range;  // variable -> mode count
        std::vector<Grade> grades;
        for (const auto& t : claim.triple) {
            syms.push_back(parse_symbol(t));
            const SpeciesBlock& b = spec.block(syms.back().species);
            grades.push_back(b.grade);
            auto [it, inserted] = range.try_emplace(syms.back().var, b.modes);
            if (!inserted) it->second = std::min(it->second, b.modes);
        }
        const auto terms = parse_claim_value(claim.value);
        for (const auto& term : terms) {
            for (const auto& [x, y] : term.deltas) {
                if (!range.count(x) || !range.count(y)) {
                    throw Error("parastat.claim", "claim '" + claim.label + "' uses an unbound index");
                }
            }
            if (term.symbol && !range.count(term.symbol->var)) {
                throw Error("parastat.claim", "claim '" + claim.label + "' uses an unbound index");
            }
        }
        std::vector<std::string> vars;
        for (const auto& [v, n] : range) vars.push_back(v);
        std::map<std::string, int> assign;
        for (const auto& v : vars) assign[v] = 1;

        bool value_ok = true;
        std::string computed_values;
        while (true) {
            auto id_of = [&](const Symbol& s) { return species_generator_id(s.species, assign.at(s.var), s.dagger); };
            Element a = spec.generator(id_of(syms[0]));
            Element b = spec.generator(id_of(syms[1]));
            Element c = spec.generator(id_of(syms[2]));
            Element got = bracket_via_q(claim.side, spec, a, b, c);
            Element want(alg);
            for (const auto& term : terms) {
                bool on = true;
                for (const auto& [x, y] : term.deltas) on = on && assign.at(x) == assign.at(y);
                if (!on) continue;
                if (term.symbol) {
                    want += spec.generator(id_of(*term.symbol)).scaled(term.coeff);
                } else {
                    want += Element::unit(alg).scaled(term.coeff);
                }
            }
            if (!(got == want)) value_ok = false;
            if (!got.is_zero()) {
                if (!computed_values.empty()) computed_values += "; ";
                std::string where;
                for (const auto& v : vars) where += (where.empty() ? "" : ",") + v + "=" + std::to_string(assign[v]);
                computed_values += where + ": " + got.str();
            }
            std::size_t pos = vars.size();
            while (pos > 0 && ++assign[vars[pos - 1]] > range[vars[pos - 1]]) {
                assign[vars[pos - 1]] = 1;
                --pos;
            }
            if (pos == 0) break;
        }
        const std::string form = commutator_form(claim.side, spec.grading(), grades, claim.triple);
        const bool form_ok = claim.form.empty() || strip_ws(claim.form) == strip_ws(form);
        Verdict v{"claim", claim.label, Status::pass, {}, {}};
        const bool match = value_ok && form_ok;
        if (!match || !claim.expect_match) {
            std::string note;
            if (!value_ok) note += "claimed value " + claim.value + " differs from the computed bracket";
            if (!form_ok) note += std::string(note.empty() ? "" : "; ") + "claimed form " + claim.form + ", computed " + form;
            if (match) note = "claim expected to deviate but matches";
            v.note = note;
            v.witness = computed_values.empty() ? "0" : computed_values;
            v.status = (!match && !claim.expect_match) ? Status::flagged : Status::fail;
        }
        report.add(std::move(v));
    }
    return report;
}

Report check_realized_jacobi(const SpeciesSpec& spec, Side side, const Execution& exec, const SweepOptions& opts) {
    TrilinearMap br = [&spec, side](const Element& a, const Element& b, const Element& c) {
        return bracket_via_q(side, spec, a, b, c);
    };
    return check_jacobi(side, br, spec.algebra(), spec.grading(), exec, opts);
}

}  // namespace parabraid
