#include "parabraid/schur.hpp"

#include "parabraid/error.hpp"

#include <algorithm>
#include <map>

namespace parabraid {

namespace {

using B = BraidGen;

std::vector<BraidWord> chain_words(Side which) {
    if (which == Side::left) return {{}, {B::b1}, {B::b1, B::b2, B::b1}, {B::b1, B::b2, B::b1, B::b2}};
    return {{}, {B::b2}, {B::b2, B::b1, B::b2}, {B::b2, B::b1, B::b2, B::b1}};
}

std::vector<Perm3> chain_perms(Side which) {
    if (which == Side::left) return {Perm3::e1, Perm3::e12, Perm3::e13, Perm3::e132};
    return {Perm3::e1, Perm3::e23, Perm3::e13, Perm3::e123};
}

Element first_basis_tensor(const Braiding& psi, const std::vector<Grade>& grades) {
    if (grades.size() != 3) throw Error("schur.arity", "symmetrizers act on 3-fold tensors");
    Word w;
    for (const auto& g : grades) {
        psi.grading().group().validate(g);
        if (psi.dim(g) == 0) throw Error("schur.grade", "grade " + render_grade(g) + " carries no basis vectors");
        w.push_back(psi.basis_letter(g, 0));
    }
    return Element::word(psi.basis_spec(), w);
}

}  // namespace

std::string perm_name(Perm3 p) {
    switch (p) {
        case Perm3::e1: return "e1";
        case Perm3::e12: return "e12";
        case Perm3::e13: return "e13";
        case Perm3::e23: return "e23";
        case Perm3::e123: return "e123";
        case Perm3::e132: return "e132";
    }
    return "?";
}

std::vector<Perm3> all_perms() {
    return {Perm3::e1, Perm3::e12, Perm3::e13, Perm3::e23, Perm3::e123, Perm3::e132};
}

BraidWord minimal_braid_word(Perm3 p) {
    switch (p) {
        case Perm3::e1: return {};
        case Perm3::e12: return {B::b1};
        case Perm3::e23: return {B::b2};
        case Perm3::e13: return {B::b1, B::b2, B::b1};
        case Perm3::e123: return {B::b1, B::b2};
        case Perm3::e132: return {B::b2, B::b1};
    }
    return {};
}

Word permute_word(Perm3 p, const Word& w) {
    if (w.size() != 3) throw Error("schur.arity", "permutations act on 3-letter words");
    switch (p) {
        case Perm3::e1: return w;
        case Perm3::e12: return {w[1], w[0], w[2]};
        case Perm3::e13: return {w[2], w[1], w[0]};
        case Perm3::e23: return {w[0], w[2], w[1]};
        case Perm3::e123: return {w[1], w[2], w[0]};
        case Perm3::e132: return {w[2], w[0], w[1]};
    }
    return w;
}

Element PermOp::apply(const Braiding& psi, const Element& x) const {
    Element out(x.spec());
    for (const auto& t : terms) out += psi.apply(x, t.word).scaled(t.weight);
    return out;
}

PermOp classical_perm_op(const std::vector<std::pair<Perm3, Scalar>>& coeffs) {
    PermOp op;
    for (const auto& [p, c] : coeffs) op.terms.push_back({p, minimal_braid_word(p), c});
    return op;
}

PermOp braided_symmetrizer(const Braiding& psi, const std::vector<Grade>& grades, Side which) {
    const Element probe = first_basis_tensor(psi, grades);
    PermOp op;
    const auto words = chain_words(which);
    const auto perms = chain_perms(which);
    for (std::size_t i = 0; i < words.size(); ++i) {
        (void)psi.apply(probe, words[i]);  // surfaces braiding.missing-component
        op.terms.push_back({perms[i], words[i], Scalar(1)});
    }
    return op;
}

std::vector<Scalar> symmetrizer_coefficients(const Braiding& psi, const std::vector<Grade>& grades, Side which) {
    if (!psi.is_diagonal()) {
        throw Error("schur.not-diagonal", "scalar symmetrizer coefficients exist only for diagonal braidings");
    }
    const Element probe = first_basis_tensor(psi, grades);
    std::vector<Scalar> out;
    for (const auto& w : chain_words(which)) {
        Element img = psi.apply(probe, w);
        out.push_back(img.is_zero() ? Scalar(0) : img.terms().begin()->second);
    }
    return out;
}

OperatorMatrix operator_matrix(const PermOp& op, const Braiding& psi, const std::vector<Grade>& grades) {
    if (grades.size() != 3) throw Error("schur.arity", "operator matrices act on 3-fold tensors");
    OperatorMatrix m;
    std::vector<Grade> order = grades;
    std::sort(order.begin(), order.end());
    do {
        m.blocks.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    for (const auto& blk : m.blocks) {
        for (const auto& g : blk) {
            if (psi.dim(g) == 0) throw Error("schur.grade", "grade " + render_grade(g) + " carries no basis vectors");
        }
        for (int i = 0; i < psi.dim(blk[0]); ++i)
            for (int j = 0; j < psi.dim(blk[1]); ++j)
                for (int k = 0; k < psi.dim(blk[2]); ++k)
                    m.basis.push_back({psi.basis_letter(blk[0], i), psi.basis_letter(blk[1], j),
                                       psi.basis_letter(blk[2], k)});
    }
    std::map<Word, std::size_t> row_of;
    for (std::size_t r = 0; r < m.basis.size(); ++r) row_of[m.basis[r]] = r;
    m.matrix = zero_matrix(m.basis.size(), m.basis.size());
    for (std::size_t c = 0; c < m.basis.size(); ++c) {
        Element img = op.apply(psi, Element::word(psi.basis_spec(), m.basis[c]));
        for (const auto& [w, coeff] : img.terms()) {
            auto it = row_of.find(w);
            if (it == row_of.end()) throw Error("schur.basis", "image leaves the permuted tensor spaces");
            m.matrix[it->second][c] = coeff;
        }
    }
    return m;
}

std::size_t operator_rank(const OperatorMatrix& m) { return matrix_rank(m.matrix); }

ClassicalDims classical_decomposition_dims(long n) {
    if (n < 1) throw Error("schur.dims", "component dimension must be at least 1");
    ClassicalDims d;
    d.sym = (n + 2) * (n + 1) * n / 6;
    d.alt = n * (n - 1) * (n - 2) / 6;
    d.mixed = n * (n * n - 1) / 3;
    d.identity_holds = n * n * n == d.sym + d.alt + 2 * d.mixed;
    return d;
}

Report check_symmetrizer_bracket(const Braiding& psi, Side which, const Execution& exec) {
    const auto triples = grade_tuples(psi.grades(), 3);
    const std::string id = std::string("symmetrizer-sym-") + (which == Side::left ? "left" : "right");
    const auto& spec = psi.basis_spec();
    auto verdicts = parallel_map<Verdict>(exec, triples.size(), [&](std::size_t idx) {
        const auto& t = triples[idx];
        Verdict v{id, render_grades(t), Status::pass, {}, {}};
        const PermOp op = braided_symmetrizer(psi, t, which);
        for (int i = 0; i < psi.dim(t[0]) && v.status == Status::pass; ++i)
            for (int j = 0; j < psi.dim(t[1]) && v.status == Status::pass; ++j)
                for (int k = 0; k < psi.dim(t[2]) && v.status == Status::pass; ++k) {
                    Element a = Element::word(spec, {psi.basis_letter(t[0], i)});
                    Element b = Element::word(spec, {psi.basis_letter(t[1], j)});
                    Element c = Element::word(spec, {psi.basis_letter(t[2], k)});
                    Element diff = op.apply(psi, a * b * c) - ternary_bracket({which, Signs::sym}, psi, a, b, c);
                    if (!diff.is_zero()) {
                        v.status = Status::fail;
                        v.witness = diff.str();
                    }
                }
        if (v.status == Status::fail && psi.is_diagonal()) {
            const Grading& g = psi.grading();
            bool non_unitary = false;
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y)
                    if (!(g.phase(t[x], t[y]) * g.phase(t[y], t[x]) == Scalar(1))) non_unitary = true;
            if (non_unitary) {
                v.status = Status::flagged;
                v.note = "phase formula and braid composite differ on a non-unitary pair";
            }
        }
        return v;
    });
    Report rep;
    for (auto& v : verdicts) rep.add(std::move(v));
    return rep;
}

Braiding trivial_swap_braiding(int n) {
    if (n < 1) throw Error("schur.dims", "component dimension must be at least 1");
    Grading g(GradeGroup{2, 1}, SigmaForm{{{0}}}, 1);
    const Grade zero{0};
    MatrixComponent c(zero, zero, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j, j, i) = Scalar(1);
    return Braiding::matrix(std::move(g), {{zero, n}}, {c});
}

}  // namespace parabraid
