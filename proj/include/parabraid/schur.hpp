#pragma once

#include "parabraid/braiding.hpp"
#include "parabraid/linalg.hpp"
#include "parabraid/ternary.hpp"

#include <string>
#include <vector>

namespace parabraid {

/// Elements of the symmetric group on three tensor slots. e132 sends abc to cab,
/// e123 sends abc to bca.
enum class Perm3 { e1, e12, e13, e23, e123, e132 };

std::string perm_name(Perm3 p);
std::vector<Perm3> all_perms();
/// Shortest braid word realizing p on plain swaps.
BraidWord minimal_braid_word(Perm3 p);
/// Place permutation of a 3-letter word.
Word permute_word(Perm3 p, const Word& w);

struct PermTerm {
    Perm3 perm;
    BraidWord word;
    Scalar weight = Scalar(1);
};

/// Formal combination of permutations, acting through braid composites.
struct PermOp {
    std::vector<PermTerm> terms;

    /// sum weight * Psi(word) applied to x
    Element apply(const Braiding& psi, const Element& x) const;
};

/// Classical combination with the shortest words for each permutation.
PermOp classical_perm_op(const std::vector<std::pair<Perm3, Scalar>>& coeffs);

/// Braided symmetrizer e1 + Psi e12 + (3-fold) e13 + (4-fold) e132 for the left side,
/// e1 + Psi e23 + (3-fold) e13 + (4-fold) e123 for the right side. Weights are 1;
/// the braid composites carry the coefficients. Validates the components for `grades`.
PermOp braided_symmetrizer(const Braiding& psi, const std::vector<Grade>& grades, Side which);

/// Scalar coefficients of the four composites on a diagonal braiding (products of phases
/// along each chain). Throws schur.not-diagonal for matrix braidings.
std::vector<Scalar> symmetrizer_coefficients(const Braiding& psi, const std::vector<Grade>& grades, Side which);

/// Exact matrix of a PermOp on the direct sum of the tensor spaces of every distinct
/// ordering of `grades`.
struct OperatorMatrix {
    std::vector<std::vector<Grade>> blocks;
    std::vector<Word> basis;
    ScalarMatrix matrix;  // matrix[row][col], column = image of basis[col]
};

OperatorMatrix operator_matrix(const PermOp& op, const Braiding& psi, const std::vector<Grade>& grades);
std::size_t operator_rank(const OperatorMatrix& m);

struct ClassicalDims {
    long sym = 0;    // C(n+2,3)
    long alt = 0;    // C(n,3)
    long mixed = 0;  // n(n^2-1)/3
    bool identity_holds = false;  // n^3 = sym + alt + 2 mixed
};

ClassicalDims classical_decomposition_dims(long n);

/// Braided symmetrizer against ternary_bracket(SYM) on every basis tensor, per grade
/// triple. On a diagonal braiding a mismatch on a triple containing a non-unitary pair
/// is flagged; any other mismatch fails.
Report check_symmetrizer_bracket(const Braiding& psi, Side which, const Execution& exec = {});

/// One grade, dimension n, Psi(e_i (x) e_j) = e_j (x) e_i.
Braiding trivial_swap_braiding(int n);

}  // namespace parabraid
