#include "parabraid/braiding.hpp"

#include "parabraid/error.hpp"

#include <sstream>

namespace parabraid {

namespace {

std::string grade_id(const Grade& g) {
    std::string s = "x(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g[i]);
    }
    return s + ")";
}

}  // namespace

std::string render_grades(const std::vector<Grade>& gs) {
    std::string out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) out += '|';
        out += render_grade(gs[i]);
    }
    return out;
}

BraidWord braid_preset(const std::string& name) {
    using B = BraidGen;
    static const std::map<std::string, BraidWord> presets = {
        {"left-id", {}},
        {"left-1", {B::b1}},
        {"left-3", {B::b1, B::b2, B::b1}},
        {"left-4", {B::b1, B::b2, B::b1, B::b2}},
        {"left-full-twist", {B::b1, B::b2, B::b1, B::b2}},
        {"right-id", {}},
        {"right-1", {B::b2}},
        {"right-3", {B::b2, B::b1, B::b2}},
        {"right-4", {B::b2, B::b1, B::b2, B::b1}},
        {"right-full-twist", {B::b2, B::b1, B::b2, B::b1}},
    };
    auto it = presets.find(name);
    if (it == presets.end()) throw Error("braiding.unknown-preset", "unknown braid preset '" + name + "'");
    return it->second;
}

std::vector<std::string> braid_preset_names() {
    return {"left-id", "left-1", "left-3", "left-4", "left-full-twist",
            "right-id", "right-1", "right-3", "right-4", "right-full-twist"};
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "b1") {
            w.push_back(BraidGen::b1);
        } else if (tok == "b2") {
            w.push_back(BraidGen::b2);
        } else if (tok == "b1^-1") {
            w.push_back(BraidGen::b1_inv);
        } else if (tok == "b2^-1") {
            w.push_back(BraidGen::b2_inv);
        } else if (!tok.empty()) {
            throw Error("braiding.parse", "unknown braid generator '" + tok + "'");
        }
    }
    return w;
}

std::string render_braid_word(const BraidWord& w) {
    static const char* names[] = {"b1", "b2", "b1^-1", "b2^-1"};
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += names[static_cast<int>(w[i])];
    }
    return out;
}

MatrixComponent::MatrixComponent(Grade l, Grade r, int dl, int dr)
    : left(std::move(l)), right(std::move(r)), dim_left(dl), dim_right(dr),
      entries(static_cast<std::size_t>(dl * dr * dr * dl)) {}

Scalar& MatrixComponent::at(int i, int j, int m, int n) {
    return entries[static_cast<std::size_t>(((i * dim_right + j) * dim_right + m) * dim_left + n)];
}

const Scalar& MatrixComponent::at(int i, int j, int m, int n) const {
    return entries[static_cast<std::size_t>(((i * dim_right + j) * dim_right + m) * dim_left + n)];
}

Braiding Braiding::diagonal(Grading grading) {
    Braiding b(std::move(grading));
    b.diagonal_ = true;
    const auto els = b.grading_.group().elements();
    for (const auto& g : els) b.dims_[g] = 1;
    b.phases_.reserve(els.size() * els.size());
    b.inverse_phases_.reserve(els.size() * els.size());
    for (const auto& v : els) {
        for (const auto& w : els) {
            b.phases_.push_back(b.grading_.phase(v, w));
            b.inverse_phases_.push_back(b.phases_.back().inverse());
        }
    }
    b.build_basis_spec();
    return b;
}

Braiding Braiding::matrix(Grading grading, std::map<Grade, int> dims,
                          std::vector<MatrixComponent> components) {
    Braiding b(std::move(grading));
    b.diagonal_ = false;
    for (const auto& [g, d] : dims) {
        b.grading_.group().validate(g);
        if (d < 0) throw Error("braiding.dimension", "negative dimension for " + render_grade(g));
        if (d > 0) b.dims_[g] = d;
    }
    for (auto& c : components) {
        int dl = b.dim(c.left);
        int dr = b.dim(c.right);
        if (c.dim_left != dl || c.dim_right != dr ||
            c.entries.size() != static_cast<std::size_t>(dl * dr * dr * dl)) {
            throw Error("braiding.dimension", "component " + render_grades({c.left, c.right}) +
                                                  " does not match the declared dimensions");
        }
        auto key = std::make_pair(c.left, c.right);
        if (b.components_.count(key)) {
            throw Error("braiding.duplicate-component",
                        "component " + render_grades({c.left, c.right}) + " given twice");
        }
        // Psi_{l,r} as a matrix from A_l (x) A_r (index i*dr+j) to A_r (x) A_l (index m*dl+n)
        ScalarMatrix p = zero_matrix(static_cast<std::size_t>(dl * dr), static_cast<std::size_t>(dl * dr));
        for (int i = 0; i < dl; ++i)
            for (int j = 0; j < dr; ++j)
                for (int m = 0; m < dr; ++m)
                    for (int n = 0; n < dl; ++n)
                        p[static_cast<std::size_t>(m * dl + n)][static_cast<std::size_t>(i * dr + j)] =
                            c.at(i, j, m, n);
        b.inverses_[std::make_pair(c.right, c.left)] = matrix_inverse(p);
        b.components_.emplace(key, std::move(c));
    }
    b.build_basis_spec();
    return b;
}

void Braiding::build_basis_spec() {
    std::vector<Generator> gens;
    for (const auto& [g, d] : dims_) {
        for (int i = 0; i < d; ++i) {
            std::string id = grade_id(g);
            if (!diagonal_) id += "_" + std::to_string(i);
            gens.push_back(Generator{id, g, std::nullopt, i});
        }
    }
    basis_spec_ = std::make_shared<const AlgebraSpec>(grading_.group(), std::move(gens));
}

int Braiding::dim(const Grade& g) const {
    auto it = dims_.find(g);
    return it == dims_.end() ? 0 : it->second;
}

std::vector<Grade> Braiding::grades() const {
    std::vector<Grade> out;
    for (const auto& [g, d] : dims_) out.push_back(g);
    return out;
}

bool Braiding::has_component(const Grade& left, const Grade& right) const {
    return diagonal_ || components_.count({left, right}) > 0;
}

const MatrixComponent& Braiding::component(const Grade& left, const Grade& right) const {
    auto it = components_.find({left, right});
    if (it == components_.end()) {
        throw Error("braiding.missing-component",
                    "no braiding component for grade pair " + render_grades({left, right}));
    }
    return it->second;
}

Letter Braiding::basis_letter(const Grade& g, int index) const {
    auto l = basis_spec_->find_basis(g, index);
    if (!l) throw Error("braiding.missing-basis", "no basis vector " + std::to_string(index) + " in " + render_grade(g));
    return *l;
}

std::size_t Braiding::grade_index(const Grade& g) const {
    // elements() enumerates lexicographically, first component most significant
    std::size_t idx = 0;
    const auto n = static_cast<std::size_t>(grading_.group().modulus);
    for (int c : g) idx = idx * n + static_cast<std::size_t>(c);
    return idx;
}

const Scalar& Braiding::phase_of(const Grade& v, const Grade& w) const {
    return phases_[grade_index(v) * dims_.size() + grade_index(w)];
}

const Scalar& Braiding::inverse_phase(const Grade& v, const Grade& w) const {
    return inverse_phases_[grade_index(v) * dims_.size() + grade_index(w)];
}

Element Braiding::apply_pair(const Element& x, std::size_t t, bool inverse) const {
    const auto& spec = *x.spec();
    Element out(x.spec());
    for (const auto& [w, c] : x.terms()) {
        if (w.size() < t + 2) {
            throw Error("braiding.arity", "cannot braid positions " + std::to_string(t + 1) + "," +
                                              std::to_string(t + 2) + " of word " + spec.render_word(w));
        }
        const Generator& gu = spec.generator(w[t]);
        const Generator& gv = spec.generator(w[t + 1]);
        if (diagonal_) {
            Word nw = w;
            std::swap(nw[t], nw[t + 1]);
            // inverse of Psi_{v,u} applied to u (x) v
            out.add_term(std::move(nw), c * (inverse ? inverse_phase(gv.grade, gu.grade) : phase_of(gu.grade, gv.grade)));
            continue;
        }
        auto lookup = [&](const Grade& g, int idx) {
            auto l = spec.find_basis(g, idx);
            if (!l) {
                throw Error("braiding.missing-basis", "algebra has no basis vector " + std::to_string(idx) +
                                                          " of grade " + render_grade(g));
            }
            return *l;
        };
        if (!inverse) {
            const MatrixComponent& comp = component(gu.grade, gv.grade);
            const int i = gu.basis_index, j = gv.basis_index;
            for (int m = 0; m < comp.dim_right; ++m) {
                for (int n = 0; n < comp.dim_left; ++n) {
                    const Scalar& coeff = comp.at(i, j, m, n);
                    if (coeff.is_zero()) continue;
                    Word nw = w;
                    nw[t] = lookup(gv.grade, m);
                    nw[t + 1] = lookup(gu.grade, n);
                    out.add_term(nw, c * coeff);
                }
            }
        } else {
            // u in A_g1, v in A_g2; result in A_g2 (x) A_g1 via the inverse of Psi_{g2,g1}
            const Grade& g1 = gu.grade;
            const Grade& g2 = gv.grade;
            component(g2, g1);
            const auto& inv = inverses_.at({g1, g2});
            if (!inv) {
                throw Error("braiding.not-invertible",
                            "braiding component " + render_grades({g2, g1}) + " is singular");
            }
            const int d1 = dim(g1), d2 = dim(g2);
            const auto col = static_cast<std::size_t>(gu.basis_index * d2 + gv.basis_index);
            for (int p = 0; p < d2; ++p) {
                for (int q = 0; q < d1; ++q) {
                    const Scalar& coeff = (*inv)[static_cast<std::size_t>(p * d1 + q)][col];
                    if (coeff.is_zero()) continue;
                    Word nw = w;
                    nw[t] = lookup(g2, p);
                    nw[t + 1] = lookup(g1, q);
                    out.add_term(nw, c * coeff);
                }
            }
        }
    }
    return out;
}

Element Braiding::apply(const Element& x, const BraidWord& w) const {
    Element cur = x;
    for (BraidGen g : w) {
        switch (g) {
            case BraidGen::b1: cur = apply_pair(cur, 0, false); break;
            case BraidGen::b2: cur = apply_pair(cur, 1, false); break;
            case BraidGen::b1_inv: cur = apply_pair(cur, 0, true); break;
            case BraidGen::b2_inv: cur = apply_pair(cur, 1, true); break;
        }
    }
    return cur;
}

Report check_unitarity(const Braiding& psi, const Execution& exec) {
    const auto pairs = grade_tuples(psi.grades(), 2);
    const auto& spec = psi.basis_spec();
    auto verdicts = parallel_map<Verdict>(exec, pairs.size(), [&](std::size_t idx) {
        const auto& p = pairs[idx];
        Verdict v{"unitarity", render_grades(p), Status::pass, {}, {}};
        Element residual(spec);
        for (int i = 0; i < psi.dim(p[0]); ++i) {
            for (int j = 0; j < psi.dim(p[1]); ++j) {
                Element x = Element::word(spec, {psi.basis_letter(p[0], i), psi.basis_letter(p[1], j)});
                Element back = psi.apply_pair(psi.apply_pair(x, 0), 0);
                if (residual.is_zero() && !(back == x)) residual = back - x;
            }
        }
        if (!residual.is_zero()) {
            v.status = Status::flagged;
            v.witness = residual.str();
            v.note = "double braiding is not the identity on this pair";
        }
        return v;
    });
    Report r;
    for (auto& v : verdicts) r.add(std::move(v));
    return r;
}

Report check_yang_baxter(const Braiding& psi, const Execution& exec) {
    const auto triples = grade_tuples(psi.grades(), 3);
    const auto& spec = psi.basis_spec();
    const BraidWord lhs{BraidGen::b1, BraidGen::b2, BraidGen::b1};
    const BraidWord rhs{BraidGen::b2, BraidGen::b1, BraidGen::b2};
    auto verdicts = parallel_map<Verdict>(exec, triples.size(), [&](std::size_t idx) {
        const auto& t = triples[idx];
        Verdict v{"yang-baxter", render_grades(t), Status::pass, {}, {}};
        Element residual(spec);
        for (int i = 0; i < psi.dim(t[0]); ++i) {
            for (int j = 0; j < psi.dim(t[1]); ++j) {
                for (int k = 0; k < psi.dim(t[2]); ++k) {
                    Element x = Element::word(spec, {psi.basis_letter(t[0], i), psi.basis_letter(t[1], j),
                                                     psi.basis_letter(t[2], k)});
                    Element l = psi.apply(x, lhs), r = psi.apply(x, rhs);
                    if (residual.is_zero() && !(l == r)) residual = l - r;
                }
            }
        }
        if (!residual.is_zero()) {
            v.status = Status::fail;
            v.witness = residual.str();
        }
        return v;
    });
    Report r;
    for (auto& v : verdicts) r.add(std::move(v));
    return r;
}

}  // namespace parabraid
