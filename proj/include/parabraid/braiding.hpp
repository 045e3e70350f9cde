#pragma once

#include "parabraid/freealg.hpp"
#include "parabraid/grading.hpp"
#include "parabraid/linalg.hpp"
#include "parabraid/parallel.hpp"
#include "parabraid/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace parabraid {

enum class BraidGen : std::uint8_t { b1, b2, b1_inv, b2_inv };
/// Applied left to right: the first generator acts first.
using BraidWord = std::vector<BraidGen>;

/// Named three-strand composites: left-id, left-1, left-3, left-4 (alias
/// left-full-twist) and their right-hand mirrors.
BraidWord braid_preset(const std::string& name);
std::vector<std::string> braid_preset_names();
BraidWord parse_braid_word(const std::string& text);  // "b1,b2,b1^-1"
std::string render_braid_word(const BraidWord& w);

/// Psi(e_i (x) f_j) = sum_{m,n} T(i,j,m,n) f_m (x) e_n with e in A_left, f in A_right.
struct MatrixComponent {
    Grade left;
    Grade right;
    int dim_left = 1;
    int dim_right = 1;
    std::vector<Scalar> entries;  // size dl*dr*dr*dl, row-major in (i,j,m,n)

    MatrixComponent() = default;
    MatrixComponent(Grade l, Grade r, int dl, int dr);
    Scalar& at(int i, int j, int m, int n);
    const Scalar& at(int i, int j, int m, int n) const;
};

class Braiding {
public:
    static Braiding diagonal(Grading grading);
    /// dims lists the nonzero homogeneous components; components may be incomplete,
    /// missing pairs raise braiding.missing-component when used.
    static Braiding matrix(Grading grading, std::map<Grade, int> dims,
                           std::vector<MatrixComponent> components);

    bool is_diagonal() const { return diagonal_; }
    const Grading& grading() const { return grading_; }
    int dim(const Grade& g) const;
    /// Grades carrying basis vectors (all group elements for a diagonal braiding).
    std::vector<Grade> grades() const;
    const MatrixComponent& component(const Grade& left, const Grade& right) const;
    bool has_component(const Grade& left, const Grade& right) const;
    /// Spec with one generator per basis vector of every grade, ids "x(g)_i".
    const SpecPtr& basis_spec() const { return basis_spec_; }
    Letter basis_letter(const Grade& g, int index) const;

    /// Braids factors t and t+1 (0-based) of every word of x.
    Element apply_pair(const Element& x, std::size_t t, bool inverse = false) const;
    Element apply(const Element& x, const BraidWord& w) const;

private:
    explicit Braiding(Grading grading) : grading_(std::move(grading)) {}

    Grading grading_;
    bool diagonal_ = true;
    std::map<Grade, int> dims_;
    std::map<std::pair<Grade, Grade>, MatrixComponent> components_;
    // inverse of Psi_{g2,g1}, keyed by (g1,g2): rows (p,q), cols (a,b)
    std::map<std::pair<Grade, Grade>, std::optional<ScalarMatrix>> inverses_;
    SpecPtr basis_spec_;
    // diagonal only: phase(v,w) and its inverse at grade_index(v) * |group| + grade_index(w)
    std::vector<Scalar> phases_;
    std::vector<Scalar> inverse_phases_;

    void build_basis_spec();
    std::size_t grade_index(const Grade& g) const;
    const Scalar& phase_of(const Grade& v, const Grade& w) const;
    const Scalar& inverse_phase(const Grade& v, const Grade& w) const;
};

/// Psi_{w,v} o Psi_{v,w} = id per ordered grade pair; failures are flagged.
Report check_unitarity(const Braiding& psi, const Execution& exec = {});
/// b1 b2 b1 = b2 b1 b2 on every basis tensor of every grade triple.
Report check_yang_baxter(const Braiding& psi, const Execution& exec = {});

std::string render_grades(const std::vector<Grade>& gs);

}  // namespace parabraid
