#include "parabraid/ternary.hpp"

#include "parabraid/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace parabraid {

namespace {

struct Term {
    Letter letter;
    Scalar coeff;
};

std::vector<Term> linear_terms(const Element& x) {
    std::vector<Term> out;
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != 1) {
            throw Error("ternary.matrix-arity",
                        "contraction needs arguments in the generator span, got " + x.str());
        }
        out.push_back({w[0], c});
    }
    return out;
}

Element w3(const SpecPtr& spec, Letter x, Letter y, Letter z, const Scalar& c) {
    return Element::word(spec, Word{x, y, z}, c);
}

// Coefficient Psi(i,j,m,n) for the component (gl, gr); a diagonal braiding is 1x1.
Scalar psi_coeff(const Braiding& psi, const Grade& gl, const Grade& gr, int i, int j, int m, int n) {
    if (psi.is_diagonal()) return psi.grading().phase(gl, gr);
    return psi.component(gl, gr).at(i, j, m, n);
}

int psi_dim(const Braiding& psi, const Grade& g) { return psi.is_diagonal() ? 1 : psi.dim(g); }

// Sum of per-letter contractions; `fn` receives the three letters and accumulates.
Element contract_multilinear(const Element& a, const Element& b, const Element& c,
                             const std::function<void(Letter, Letter, Letter, const Scalar&, Element&)>& fn) {
    Element out(a.spec());
    for (const auto& ta : linear_terms(a))
        for (const auto& tb : linear_terms(b))
            for (const auto& tc : linear_terms(c)) fn(ta.letter, tb.letter, tc.letter, ta.coeff * tb.coeff * tc.coeff, out);
    return out;
}

bool pair_unitary(const Grading& g, const Grade& v, const Grade& w) {
    return (g.sigma(v, w) + g.sigma(w, v)) % g.modulus() == 0;
}

bool triple_unitary(const Grading& g, const std::vector<Grade>& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y)
            if (!pair_unitary(g, t[x], t[y])) return false;
    return true;
}

Report collect(std::vector<Verdict> vs) {
    Report r;
    for (auto& v : vs) r.add(std::move(v));
    return r;
}

void require_diagonal(const Braiding& psi, const char* what) {
    if (!psi.is_diagonal()) {
        throw Error("ternary.requires-diagonal", std::string(what) + " is defined for diagonal braidings");
    }
}

std::string side_suffix(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace

std::string BracketVariant::name() const {
    return std::string(signs == Signs::sym ? "sym-" : "alt-") + side_suffix(side);
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw Error("ternary.parse", "side must be left or right, got '" + s + "'");
}

Signs parse_signs(const std::string& s) {
    if (s == "sym") return Signs::sym;
    if (s == "alt") return Signs::alt;
    throw Error("ternary.parse", "variant must be sym or alt, got '" + s + "'");
}

Element bracket_by_phases(const BracketVariant& v, const Grading& g, const Element& a,
                          const Element& b, const Element& c) {
    const Grade gi = a.homogeneous_grade("ternary.grade");
    const Grade gj = b.homogeneous_grade("ternary.grade");
    const Grade gk = c.homogeneous_grade("ternary.grade");
    const Scalar& sij = g.phase(gi, gj);
    const Scalar& sik = g.phase(gi, gk);
    const Scalar& sjk = g.phase(gj, gk);
    const Scalar tail = v.signs == Signs::sym ? Scalar(1) : Scalar(-1);
    if (v.side == Side::left) {
        return a * b * c + (b * a * c).scaled(sij) + (c * a * b).scaled(tail * sik * sjk) +
               (c * b * a).scaled(tail * sij * sik * sjk);
    }
    return a * b * c + (a * c * b).scaled(sjk) + (b * c * a).scaled(tail * sij * sik) +
           (c * b * a).scaled(tail * sjk * sij * sik);
}

Element bracket_by_contraction(const BracketVariant& v, const Braiding& psi, const Element& a,
                               const Element& b, const Element& c) {
    const auto& spec = a.spec();
    const AlgebraSpec& sp = *spec;
    const Scalar tail = v.signs == Signs::sym ? Scalar(1) : Scalar(-1);
    // basis letter of grade g and index idx; a 1-dimensional diagonal component keeps the letter
    auto basis = [&](const Grade& g, int idx, Letter same) -> Letter {
        if (psi.is_diagonal()) return same;
        auto l = sp.find_basis(g, idx);
        if (!l) throw Error("braiding.missing-basis", "no basis vector " + std::to_string(idx) + " of grade " + render_grade(g));
        return *l;
    };
    return contract_multilinear(a, b, c, [&](Letter e, Letter f, Letter gg, const Scalar& k0, Element& out) {
        const Generator& ge = sp.generator(e);
        const Generator& gf = sp.generator(f);
        const Generator& gg_ = sp.generator(gg);
        const Grade& A = ge.grade;
        const Grade& B = gf.grade;
        const Grade& C = gg_.grade;
        const int dA = psi_dim(psi, A), dB = psi_dim(psi, B), dC = psi_dim(psi, C);
        const int i = psi.is_diagonal() ? 0 : ge.basis_index;
        const int j = psi.is_diagonal() ? 0 : gf.basis_index;
        const int k = psi.is_diagonal() ? 0 : gg_.basis_index;
        out += w3(spec, e, f, gg, k0);
        if (v.side == Side::left) {
            for (int m = 0; m < dB; ++m)
                for (int n = 0; n < dA; ++n) {
                    Scalar p1 = psi_coeff(psi, A, B, i, j, m, n);
                    if (p1.is_zero()) continue;
                    out += w3(spec, basis(B, m, f), basis(A, n, e), gg, k0 * p1);
                    for (int p = 0; p < dC; ++p)
                        for (int q = 0; q < dA; ++q) {
                            Scalar p2 = psi_coeff(psi, A, C, n, k, p, q);
                            if (p2.is_zero()) continue;
                            for (int r = 0; r < dC; ++r)
                                for (int s = 0; s < dB; ++s) {
                                    Scalar p3 = psi_coeff(psi, B, C, m, p, r, s);
                                    if (p3.is_zero()) continue;
                                    Scalar k3 = k0 * p1 * p2 * p3;
                                    out += w3(spec, basis(C, r, gg), basis(B, s, f), basis(A, q, e), tail * k3);
                                    for (int t = 0; t < dA; ++t)
                                        for (int u = 0; u < dB; ++u) {
                                            Scalar p4 = psi_coeff(psi, B, A, s, q, t, u);
                                            if (p4.is_zero()) continue;
                                            out += w3(spec, basis(C, r, gg), basis(A, t, e), basis(B, u, f),
                                                      tail * k3 * p4);
                                        }
                                }
                        }
                }
        } else {
            for (int m = 0; m < dC; ++m)
                for (int n = 0; n < dB; ++n) {
                    Scalar p1 = psi_coeff(psi, B, C, j, k, m, n);
                    if (p1.is_zero()) continue;
                    out += w3(spec, e, basis(C, m, gg), basis(B, n, f), k0 * p1);
                    for (int p = 0; p < dC; ++p)
                        for (int q = 0; q < dA; ++q) {
                            Scalar p2 = psi_coeff(psi, A, C, i, m, p, q);
                            if (p2.is_zero()) continue;
                            for (int r = 0; r < dB; ++r)
                                for (int s = 0; s < dA; ++s) {
                                    Scalar p3 = psi_coeff(psi, A, B, q, n, r, s);
                                    if (p3.is_zero()) continue;
                                    Scalar k3 = k0 * p1 * p2 * p3;
                                    out += w3(spec, basis(C, p, gg), basis(B, r, f), basis(A, s, e), tail * k3);
                                    for (int t = 0; t < dB; ++t)
                                        for (int u = 0; u < dC; ++u) {
                                            Scalar p4 = psi_coeff(psi, C, B, p, r, t, u);
                                            if (p4.is_zero()) continue;
                                            out += w3(spec, basis(B, t, f), basis(C, u, gg), basis(A, s, e),
                                                      tail * k3 * p4);
                                        }
                                }
                        }
                }
        }
    });
}

Element ternary_bracket(const BracketVariant& v, const Braiding& psi, const Element& a,
                        const Element& b, const Element& c) {
    if (psi.is_diagonal()) return bracket_by_phases(v, psi.grading(), a, b, c);
    return bracket_by_contraction(v, psi, a, b, c);
}

Element deformed_binary_bracket(const Grading& grading, const Element& x, const Element& y) {
    const Grade gx = x.homogeneous_grade("ternary.grade");
    const Grade gy = y.homogeneous_grade("ternary.grade");
    return x * y + (y * x).scaled(grading.phase(gx, gy));
}

MultiplicationOperator::MultiplicationOperator(Kind kind, Element u, Element v, TrilinearMap bracket)
    : kind_(kind), u_(std::move(u)), v_(std::move(v)), bracket_(std::move(bracket)) {}

Element MultiplicationOperator::operator()(const Element& x) const {
    return kind_ == Kind::L ? bracket_(u_, v_, x) : bracket_(x, u_, v_);
}

SpecPtr symbolic_spec(const GradeGroup& group, std::size_t positions) {
    std::vector<Generator> gens;
    for (std::size_t p = 0; p < positions; ++p) {
        for (const auto& g : group.elements()) {
            std::string id(1, static_cast<char>('a' + p));
            gens.push_back(Generator{id + render_grade(g), g, std::nullopt, static_cast<int>(p)});
        }
    }
    return std::make_shared<const AlgebraSpec>(group, std::move(gens));
}

Element symbol(const SpecPtr& spec, std::size_t position, const Grade& g) {
    std::string id(1, static_cast<char>('a' + position));
    return Element::generator(spec, id + render_grade(g));
}

std::vector<std::vector<Grade>> sweep_tuples(const std::vector<Grade>& grades, std::size_t arity,
                                             const SweepOptions& opts) {
    double total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(grades.size());
    if (total <= static_cast<double>(opts.max_tuples)) return grade_tuples(grades, arity);
    const auto count = static_cast<std::uint64_t>(total);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, count - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < opts.max_tuples) chosen.insert(dist(rng));
    const std::vector<std::uint64_t> picks(chosen.begin(), chosen.end());
    std::vector<std::vector<Grade>> out;
    out.reserve(picks.size());
    for (auto p : picks) {
        std::vector<Grade> t(arity);
        for (std::size_t pos = arity; pos-- > 0;) {
            t[pos] = grades[p % grades.size()];
            p /= grades.size();
        }
        out.push_back(std::move(t));
    }
    return out;
}

Report check_symmetry(const BracketVariant& v, const Braiding& psi, const Execution& exec) {
    require_diagonal(psi, "symmetry check");
    const Grading& g = psi.grading();
    const auto triples = grade_tuples(g.group().elements(), 3);
    const SpecPtr spec = symbolic_spec(g.group(), 3);
    const std::string id = "symmetry-" + v.name();
    return collect(parallel_map<Verdict>(exec, triples.size(), [&](std::size_t idx) {
        const auto& t = triples[idx];
        Element a = symbol(spec, 0, t[0]), b = symbol(spec, 1, t[1]), c = symbol(spec, 2, t[2]);
        Element residual = v.side == Side::left
                               ? bracket_by_phases(v, g, a, b, c) - bracket_by_phases(v, g, b, a, c).scaled(g.phase(t[0], t[1]))
                               : bracket_by_phases(v, g, a, b, c) - bracket_by_phases(v, g, a, c, b).scaled(g.phase(t[1], t[2]));
        Verdict out{id, render_grades(t), Status::pass, {}, {}};
        if (!residual.is_zero()) {
            out.witness = residual.str();
            if (!triple_unitary(g, t)) {
                out.status = Status::flagged;
                out.note = "sigma(v,w)+sigma(w,v) != 0 for a pair of this triple";
            } else {
                out.status = Status::fail;
            }
        }
        return out;
    }));
}

Report check_cyclic(const BracketVariant& v, const Braiding& psi, const Execution& exec) {
    require_diagonal(psi, "cyclic check");
    const Grading& g = psi.grading();
    const auto triples = grade_tuples(g.group().elements(), 3);
    const SpecPtr spec = symbolic_spec(g.group(), 3);
    const std::string id = "cyclic-" + v.name();
    return collect(parallel_map<Verdict>(exec, triples.size(), [&](std::size_t idx) {
        const auto& t = triples[idx];
        Element a = symbol(spec, 0, t[0]), b = symbol(spec, 1, t[1]), c = symbol(spec, 2, t[2]);
        Element residual = bracket_by_phases(v, g, a, b, c).scaled(g.phase(t[0], t[2])) +
                           bracket_by_phases(v, g, b, c, a).scaled(g.phase(t[0], t[1])) +
                           bracket_by_phases(v, g, c, a, b).scaled(g.phase(t[1], t[2]));
        Verdict out{id, render_grades(t), Status::pass, {}, {}};
        if (!residual.is_zero()) {
            out.witness = residual.str();
            if (v.signs == Signs::sym) {
                out.status = Status::expected_fail;
                out.note = "the all-plus bracket is not cyclic";
            } else if (!triple_unitary(g, t)) {
                out.status = Status::flagged;
                out.note = "sigma(v,w)+sigma(w,v) != 0 for a pair of this triple";
            } else {
                out.status = Status::fail;
            }
        }
        return out;
    }));
}

Report check_derivation(const BracketVariant& v, const Braiding& psi, const Execution& exec,
                        const SweepOptions& opts) {
    require_diagonal(psi, "derivation check");
    const Grading& g = psi.grading();
    const auto& group = g.group();
    const auto grades = group.elements();
    const SpecPtr spec = symbolic_spec(group, 5);
    TrilinearMap br = [&](const Element& x, const Element& y, const Element& z) {
        return bracket_by_phases(v, g, x, y, z);
    };
    const Status on_fail = v.signs == Signs::sym ? Status::expected_fail : Status::fail;
    const std::string side = side_suffix(v.side);
    const std::string prefix = v.signs == Signs::sym ? "sym-" : "";

    struct Job {
        std::vector<Grade> tuple;
    };
    std::vector<Job> jobs;
    for (std::size_t arity : {4u, 5u}) {
        for (auto& t : sweep_tuples(grades, arity, opts)) jobs.push_back({std::move(t)});
    }

    auto verdict_for = [&](std::size_t idx) {
        const auto& t = jobs[idx].tuple;
        std::vector<Element> x;
        for (std::size_t p = 0; p < t.size(); ++p) x.push_back(symbol(spec, p, t[p]));
        const bool four = t.size() == 4;
        Element direct(spec), via(spec);
        if (v.side == Side::left) {
            // <a,b,X> acts as a graded derivation in X
            const Grade ab = group.add(t[0], t[1]);
            MultiplicationOperator L(MultiplicationOperator::Kind::L, x[0], x[1], br);
            if (four) {
                const Scalar t1 = g.twist(ab, t[2]);
                direct = br(x[0], x[1], x[2] * x[3]) - (br(x[0], x[1], x[2]) * x[3] + (x[2] * br(x[0], x[1], x[3])).scaled(t1));
                via = L(x[2] * x[3]) - (L(x[2]) * x[3] + (x[2] * L(x[3])).scaled(t1));
            } else {
                const Scalar t1 = g.twist(ab, t[2]);
                const Scalar t2 = g.twist(ab, group.add(t[2], t[3]));
                direct = br(x[0], x[1], x[2] * x[3] * x[4]) -
                         (br(x[0], x[1], x[2]) * x[3] * x[4] + (x[2] * br(x[0], x[1], x[3]) * x[4]).scaled(t1) +
                          (x[2] * x[3] * br(x[0], x[1], x[4])).scaled(t2));
                via = L(x[2] * x[3] * x[4]) -
                      (L(x[2]) * x[3] * x[4] + (x[2] * L(x[3]) * x[4]).scaled(t1) + (x[2] * x[3] * L(x[4])).scaled(t2));
            }
        } else {
            // <X,c,d> acts as a graded derivation in X from the right
            const std::size_t last = t.size() - 2;
            const Element& y = x[last];
            const Element& z = x[last + 1];
            const Grade yz = group.add(t[last], t[last + 1]);
            MultiplicationOperator R(MultiplicationOperator::Kind::R, y, z, br);
            if (four) {
                const Scalar t1 = g.twist(t[1], yz);
                direct = br(x[0] * x[1], y, z) - (x[0] * br(x[1], y, z) + (br(x[0], y, z) * x[1]).scaled(t1));
                via = R(x[0] * x[1]) - (x[0] * R(x[1]) + (R(x[0]) * x[1]).scaled(t1));
            } else {
                const Scalar t1 = g.twist(t[2], yz);
                const Scalar t2 = g.twist(group.add(t[1], t[2]), yz);
                direct = br(x[0] * x[1] * x[2], y, z) -
                         (x[0] * x[1] * br(x[2], y, z) + (x[0] * br(x[1], y, z) * x[2]).scaled(t1) +
                          (br(x[0], y, z) * x[1] * x[2]).scaled(t2));
                via = R(x[0] * x[1] * x[2]) -
                      (x[0] * x[1] * R(x[2]) + (x[0] * R(x[1]) * x[2]).scaled(t1) + (R(x[0]) * x[1] * x[2]).scaled(t2));
            }
        }
        const std::string base = prefix + "leibniz-" + side + (four ? "-2" : "-3");
        std::vector<Verdict> out;
        out.push_back({base, render_grades(t), direct.is_zero() ? Status::pass : on_fail,
                       direct.is_zero() ? "" : direct.str(), {}});
        out.push_back({base + "-via-operator", render_grades(t), via.is_zero() ? Status::pass : on_fail,
                       via.is_zero() ? "" : via.str(), {}});
        return out;
    };
    auto nested = parallel_map<std::vector<Verdict>>(exec, jobs.size(), verdict_for);
    Report r;
    for (auto& vs : nested)
        for (auto& v2 : vs) r.add(std::move(v2));
    return r;
}

Report check_jacobi(Side side, const TrilinearMap& bracket, const SpecPtr& spec, const Grading& grading,
                    const Execution& exec, const SweepOptions& opts) {
    const auto& group = grading.group();
    TrilinearMap br = [&](const Element& x, const Element& y, const Element& z) {
        Element out = bracket(x, y, z);
        for (const auto& [w, c] : out.terms()) {
            if (w.size() != 1) {
                throw Error("ternary.not-closed", "bracket <" + x.str() + ", " + y.str() + ", " + z.str() +
                                                      "> leaves the generator span: " + out.str());
            }
        }
        return out;
    };
    // Sweep generator tuples through the same sampler, using letters as pseudo-grades.
    std::vector<Grade> letters;
    for (std::size_t l = 0; l < spec->size(); ++l) letters.push_back(Grade{static_cast<int>(l)});
    const auto tuples = sweep_tuples(letters, 5, opts);
    const std::string id = "jacobi-" + side_suffix(side);

    auto nested = parallel_map<std::vector<Verdict>>(exec, tuples.size(), [&](std::size_t idx) {
        std::vector<Element> x;
        std::vector<Grade> gr;
        std::string subject;
        for (const auto& l : tuples[idx]) {
            auto letter = static_cast<Letter>(l[0]);
            x.push_back(Element::word(spec, Word{letter}));
            gr.push_back(spec->generator(letter).grade);
            if (!subject.empty()) subject += ',';
            subject += spec->generator(letter).id;
        }
        const Element &a = x[0], &b = x[1], &c = x[2], &d = x[3], &e = x[4];
        Element lhs(spec), rhs(spec), lhs_op(spec), rhs_op(spec);
        if (side == Side::left) {
            const Grade ab = group.add(gr[0], gr[1]);
            const Scalar t1 = grading.twist(ab, gr[2]);
            const Scalar t2 = t1 * grading.twist(ab, gr[3]);
            lhs = br(a, b, br(c, d, e));
            rhs = br(br(a, b, c), d, e) + br(c, br(a, b, d), e).scaled(t1) + br(c, d, br(a, b, e)).scaled(t2);
            MultiplicationOperator L(MultiplicationOperator::Kind::L, a, b, br);
            lhs_op = L(br(c, d, e));
            rhs_op = br(L(c), d, e) + br(c, L(d), e).scaled(t1) + br(c, d, L(e)).scaled(t2);
        } else {
            const Grade de = group.add(gr[3], gr[4]);
            const Scalar t1 = grading.twist(gr[2], de);
            const Scalar t2 = grading.twist(group.add(gr[1], gr[2]), de);
            lhs = br(br(a, b, c), d, e);
            rhs = br(a, b, br(c, d, e)) + br(a, br(b, d, e), c).scaled(t1) + br(br(a, d, e), b, c).scaled(t2);
            MultiplicationOperator R(MultiplicationOperator::Kind::R, d, e, br);
            lhs_op = R(br(a, b, c));
            rhs_op = br(a, b, R(c)) + br(a, R(b), c).scaled(t1) + br(R(a), b, c).scaled(t2);
        }
        Element residual = lhs - rhs;
        std::vector<Verdict> out;
        out.push_back({id, subject, residual.is_zero() ? Status::pass : Status::fail,
                       residual.is_zero() ? "" : residual.str(),
                       side == Side::right ? "middle exponent read as sigma(c, d+e)" : ""});
        const bool same = lhs == lhs_op && rhs == rhs_op;
        out.push_back({id + "-via-operator", subject, same ? Status::pass : Status::fail,
                       same ? "" : (lhs_op - rhs_op).str(), same ? "" : "operator route differs from direct nesting"});
        return out;
    });
    Report r;
    for (auto& vs : nested)
        for (auto& v : vs) r.add(std::move(v));
    return r;
}

}  // namespace parabraid
