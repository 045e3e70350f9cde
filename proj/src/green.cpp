#include "parabraid/green.hpp"

#include "parabraid/error.hpp"

#include <map>

namespace parabraid {

namespace {

struct Mode {
    bool fermion = true;
    std::uint64_t stride = 1;
    std::uint64_t radix = 2;
    std::vector<std::size_t> klein;  // earlier modes whose parity signs this one
};

struct OpRef {
    std::size_t mode;
    bool creator;
};

struct Realization {
    std::vector<Mode> modes;
    // per generator letter: one elementary operator per Green component (empty if excluded)
    std::vector<std::vector<OpRef>> letters;
    std::vector<Letter> active;
    std::vector<std::uint64_t> safe_states;
    std::uint64_t dimension = 1;
    int cutoff = 6;
};

std::uint64_t occupation(const Mode& m, std::uint64_t code) { return (code / m.stride) % m.radix; }

// Elementary operator on a basis state: (new state, amplitude), amplitude 0 if annihilated.
std::pair<std::uint64_t, long long> act(const Realization& r, const OpRef& op, std::uint64_t code) {
    const Mode& m = r.modes[op.mode];
    const std::uint64_t n = occupation(m, code);
    long long amp = 1;
    std::uint64_t next = code;
    if (op.creator) {
        if (n + 1 >= m.radix) return {code, 0};
        next += m.stride;
    } else {
        if (n == 0) return {code, 0};
        if (!m.fermion) amp = static_cast<long long>(n);
        next -= m.stride;
    }
    for (std::size_t e : m.klein) {
        if (occupation(r.modes[e], code) % 2 == 1) amp = -amp;
    }
    return {next, amp};
}

bool is_fermionic(const SpeciesSpec& spec, const SpeciesBlock& b) {
    const Scalar& ph = spec.grading().phase(b.grade, b.grade);
    if (ph == Scalar(-1)) return true;
    if (ph == Scalar(1)) return false;
    throw Error("parastat.green-unsupported", "species '" + b.name + "' is neither fermionic nor bosonic");
}

// Which of x, x+ annihilates, and a check that Q is the canonical pairing for it.
bool dagger_annihilates(const SpeciesSpec& spec, const SpeciesBlock& b, bool fermion) {
    if (!b.daggers) throw Error("parastat.green-unsupported", "species '" + b.name + "' has no daggers");
    const std::string x1 = species_generator_id(b.name, 1, false);
    const std::string x1d = species_generator_id(b.name, 1, true);
    bool dagger_ann = false;
    if (fermion) {
        if (!(spec.q(x1, x1d) == Scalar(1))) {
            throw Error("parastat.green-unsupported", "fermionic species '" + b.name + "' needs Q(x,x+) = delta");
        }
    } else if (spec.q(x1d, x1) == Scalar(1)) {
        dagger_ann = true;
    } else if (!(spec.q(x1d, x1) == Scalar(-1))) {
        throw Error("parastat.green-unsupported", "bosonic species '" + b.name + "' needs Q(x+,x) = +-delta");
    }
    return dagger_ann;
}

Realization build(const SpeciesSpec& spec, const GreenOptions& opts, CrossRule rule) {
    if (opts.order < 1) throw Error("parastat.green-order", "order must be at least 1");
    if (opts.cutoff < 3) {
        throw Error("parastat.cutoff", "boson cutoff " + std::to_string(opts.cutoff) + " leaves no states two quanta below it");
    }
    const auto& alg = spec.algebra();
    const Grading& g = spec.grading();
    Realization r;
    r.cutoff = opts.cutoff;
    r.letters.assign(alg->size(), {});

    struct Slot {
        std::size_t species;
        int mode;
        int comp;
    };
    std::vector<Slot> slots;
    std::vector<bool> fermionic, dagger_ann;
    for (const auto& b : spec.species()) {
        fermionic.push_back(is_fermionic(spec, b));
        dagger_ann.push_back(dagger_annihilates(spec, b, fermionic.back()));
    }
    for (std::size_t s = 0; s < spec.species().size(); ++s) {
        const auto& b = spec.species()[s];
        const int modes = opts.modes > 0 ? std::min(opts.modes, b.modes) : b.modes;
        for (int m = 1; m <= modes; ++m)
            for (int a = 0; a < opts.order; ++a) slots.push_back({s, m, a});
    }
    std::uint64_t stride = 1;
    for (std::size_t e = 0; e < slots.size(); ++e) {
        Mode mode;
        mode.fermion = fermionic[slots[e].species];
        mode.radix = mode.fermion ? 2 : static_cast<std::uint64_t>(opts.cutoff + 1);
        mode.stride = stride;
        if (stride > (std::uint64_t{1} << 62) / mode.radix) throw Error("parastat.green-size", "Fock space too large");
        stride *= mode.radix;
        const Grade& ge = spec.species()[slots[e].species].grade;
        for (std::size_t f = 0; f < e; ++f) {
            const Grade& gf = spec.species()[slots[f].species].grade;
            const bool odd = g.sigma(ge, gf) % 2 == 1;
            const bool same_comp = slots[e].comp == slots[f].comp;
            const bool anti = same_comp || rule == CrossRule::same ? odd : !odd;
            if (anti) mode.klein.push_back(f);
        }
        r.modes.push_back(std::move(mode));
    }
    r.dimension = stride;

    for (std::size_t e = 0; e < slots.size(); ++e) {
        const auto& b = spec.species()[slots[e].species];
        for (bool dag : {false, true}) {
            Letter l = alg->letter(species_generator_id(b.name, slots[e].mode, dag));
            const bool creator = dag != dagger_ann[slots[e].species];
            r.letters[l].push_back({e, creator});
        }
    }
    for (std::size_t l = 0; l < r.letters.size(); ++l) {
        if (!r.letters[l].empty()) r.active.push_back(static_cast<Letter>(l));
    }

    // canonical Q on the active generators
    for (Letter x : r.active) {
        for (Letter y : r.active) {
            const OpRef& ox = r.letters[x][0];
            const OpRef& oy = r.letters[y][0];
            const auto& tx = *alg->generator(x).tag;
            const auto& ty = *alg->generator(y).tag;
            Scalar want(0);
            if (tx.species == ty.species && tx.mode == ty.mode && ox.creator != oy.creator) {
                const bool ferm = r.modes[ox.mode].fermion;
                want = !ox.creator ? Scalar(1) : (ferm ? Scalar(1) : Scalar(-1));
            }
            if (!(spec.q(x, y) == want)) {
                throw Error("parastat.green-unsupported", "Q(" + alg->generator(x).id + "," + alg->generator(y).id +
                                                              ") is not the canonical pairing for a Green realization");
            }
        }
    }

    // states: any fermion occupation, total boson occupation <= cutoff - 2
    std::vector<std::uint64_t> states{0};
    std::vector<long> boson_total{0};
    for (const auto& m : r.modes) {
        std::vector<std::uint64_t> next;
        std::vector<long> next_total;
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (std::uint64_t n = 0; n < m.radix; ++n) {
                long t = boson_total[i] + (m.fermion ? 0 : static_cast<long>(n));
                if (t > opts.cutoff - 2) break;
                next.push_back(states[i] + n * m.stride);
                next_total.push_back(t);
            }
        }
        states = std::move(next);
        boson_total = std::move(next_total);
    }
    std::sort(states.begin(), states.end());
    r.safe_states = std::move(states);
    return r;
}

std::string render_state(const Realization& r, std::uint64_t code) {
    std::string out = "|";
    for (std::size_t e = 0; e < r.modes.size(); ++e) {
        if (e) out += ',';
        out += std::to_string(occupation(r.modes[e], code));
    }
    return out + ">";
}

// Residual of a relation (sum of coefficient * word) on one basis state.
std::map<std::uint64_t, mpq_class> apply_relation(const Realization& r,
                                                  const std::vector<std::pair<Word, mpq_class>>& terms,
                                                  std::uint64_t state) {
    std::map<std::uint64_t, mpq_class> out;
    for (const auto& [w, coeff] : terms) {
        std::vector<std::pair<std::uint64_t, long long>> cur{{state, 1}};
        for (std::size_t pos = w.size(); pos-- > 0;) {
            std::vector<std::pair<std::uint64_t, long long>> next;
            for (const auto& [code, amp] : cur) {
                for (const OpRef& op : r.letters[w[pos]]) {
                    auto [nc, a] = act(r, op, code);
                    if (a != 0) next.emplace_back(nc, amp * a);
                }
            }
            cur = std::move(next);
        }
        for (const auto& [code, amp] : cur) {
            mpq_class& slot = out[code];
            slot += coeff * static_cast<long>(amp);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

std::vector<std::pair<Word, mpq_class>> relation_terms(const Element& x) {
    std::vector<std::pair<Word, mpq_class>> out;
    for (const auto& [w, c] : x.terms()) {
        if (!c.is_rational()) throw Error("parastat.green-unsupported", "relation has an irrational coefficient");
        out.emplace_back(w, c.rational_value());
    }
    return out;
}

Report run_checks(const SpeciesSpec& spec, Side side, const Realization& r, const std::vector<Letter>& letters,
                  int order, const Execution& exec) {
    const auto& alg = spec.algebra();
    const std::size_t n = letters.size();
    const std::string id = std::string("green-") + (side == Side::left ? "left" : "right") + "-p" + std::to_string(order);
    auto verdicts = parallel_map<Verdict>(exec, n * n * n, [&](std::size_t idx) {
        Letter l[3] = {letters[idx / (n * n)], letters[(idx / n) % n], letters[idx % n]};
        Element a = Element::word(alg, Word{l[0]});
        Element b = Element::word(alg, Word{l[1]});
        Element c = Element::word(alg, Word{l[2]});
        const auto terms = relation_terms(ideal_generator(side, spec, a, b, c));
        Verdict v{id, alg->generator(l[0]).id + "," + alg->generator(l[1]).id + "," + alg->generator(l[2]).id,
                  Status::pass, {}, {}};
        for (std::uint64_t s : r.safe_states) {
            auto res = apply_relation(r, terms, s);
            if (!res.empty()) {
                v.status = Status::fail;
                v.witness = "on " + render_state(r, s) + ": " + res.begin()->second.get_str() + render_state(r, res.begin()->first);
                break;
            }
        }
        return v;
    });
    Report rep;
    for (auto& v : verdicts) rep.add(std::move(v));
    return rep;
}

}  // namespace

std::string cross_rule_name(CrossRule r) { return r == CrossRule::opposite ? "opposite" : "same"; }

GreenSpace green_space(const SpeciesSpec& spec, const GreenOptions& opts) {
    Realization r = build(spec, opts, CrossRule::opposite);
    return {r.modes.size(), r.dimension, r.safe_states.size()};
}

Report green_check_rule(const SpeciesSpec& spec, Side side, const GreenOptions& opts, CrossRule rule,
                        const Execution& exec) {
    Realization r = build(spec, opts, rule);
    return run_checks(spec, side, r, r.active, opts.order, exec);
}

CrossRule select_cross_rule(const SpeciesSpec& spec, const GreenOptions& opts, const Execution& exec) {
    if (spec.species().empty()) throw Error("parastat.green-unsupported", "spec has no species");
    GreenOptions o = opts;
    o.order = std::max(2, opts.order);
    // relations among the generators of the first species only
    const std::string& first = spec.species().front().name;
    std::vector<bool> ok;
    for (CrossRule rule : {CrossRule::opposite, CrossRule::same}) {
        Realization r = build(spec, o, rule);
        std::vector<Letter> own;
        for (Letter l : r.active) {
            if (spec.algebra()->generator(l).tag->species == first) own.push_back(l);
        }
        ok.push_back(run_checks(spec, Side::left, r, own, o.order, exec).all_pass());
    }
    if (ok[0] == ok[1]) {
        throw Error("parastat.green-ansatz",
                    std::string("cross-component sign self-validation is ambiguous: ") +
                        (ok[0] ? "both rules" : "neither rule") + " reproduce the relations of species '" + first + "'");
    }
    return ok[0] ? CrossRule::opposite : CrossRule::same;
}

Report green_ansatz_check(const SpeciesSpec& spec, const GreenOptions& opts, const Execution& exec) {
    Report rep;
    CrossRule rule = CrossRule::opposite;
    GreenSpace space = green_space(spec, opts);
    if (opts.order >= 2) {
        rule = select_cross_rule(spec, opts, exec);
        rep.add({"green-cross-rule", "p=" + std::to_string(opts.order), Status::pass, {},
                 "selected rule: " + cross_rule_name(rule) + "; the other rule fails"});
    }
    rep.add({"green-space", "p=" + std::to_string(opts.order), Status::pass, {},
             "dimension " + std::to_string(space.dimension) + ", checked states " + std::to_string(space.checked_states)});
    rep.append(green_check_rule(spec, Side::left, opts, rule, exec));
    rep.append(green_check_rule(spec, Side::right, opts, rule, exec));
    return rep;
}

}  // namespace parabraid
