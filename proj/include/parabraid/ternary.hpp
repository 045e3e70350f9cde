#pragma once

#include "parabraid/braiding.hpp"
#include "parabraid/freealg.hpp"
#include "parabraid/parallel.hpp"
#include "parabraid/report.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace parabraid {

enum class Side { left, right };
enum class Signs { sym, alt };

struct BracketVariant {
    Side side = Side::left;
    Signs signs = Signs::alt;

    std::string name() const;  // e.g. "alt-left"
};

Side parse_side(const std::string& s);
Signs parse_signs(const std::string& s);

/// Dispatches on the braiding kind: phase formula for diagonal, index contraction for matrix.
Element ternary_bracket(const BracketVariant& v, const Braiding& psi, const Element& a,
                        const Element& b, const Element& c);

/// Four-term phase formula; arguments homogeneous, graded by their whole words.
Element bracket_by_phases(const BracketVariant& v, const Grading& grading, const Element& a,
                          const Element& b, const Element& c);

/// Literal contraction of braiding coefficients along the three- and four-crossing
/// chains. Arguments must be linear combinations of single generators.
Element bracket_by_contraction(const BracketVariant& v, const Braiding& psi, const Element& a,
                               const Element& b, const Element& c);

/// x y + phase(|x|,|y|) y x.
Element deformed_binary_bracket(const Grading& grading, const Element& x, const Element& y);

using TrilinearMap = std::function<Element(const Element&, const Element&, const Element&)>;

/// L_{a,b}(c) = <a,b,c>_1 or R_{y,z}(x) = <x,y,z>_2.
class MultiplicationOperator {
public:
    enum class Kind { L, R };
    MultiplicationOperator(Kind kind, Element u, Element v, TrilinearMap bracket);
    Element operator()(const Element& x) const;
    Kind kind() const { return kind_; }

private:
    Kind kind_;
    Element u_;
    Element v_;
    TrilinearMap bracket_;
};

/// Generators a(g), b(g), ... one per position and grade, for symbolic sweeps.
SpecPtr symbolic_spec(const GradeGroup& group, std::size_t positions);
Element symbol(const SpecPtr& spec, std::size_t position, const Grade& g);

struct SweepOptions {
    /// Tuple sweeps larger than this are replaced by a deterministic sample of this size.
    std::size_t max_tuples = 20000;
    std::uint64_t seed = 20241;
};

/// Tuples to sweep: all of them, or a deterministic sample when there are too many.
std::vector<std::vector<Grade>> sweep_tuples(const std::vector<Grade>& grades, std::size_t arity,
                                             const SweepOptions& opts);

/// <a,b,c>_1 = s_ij <b,a,c>_1, or <a,b,c>_2 = s_jk <a,c,b>_2, per grade triple.
Report check_symmetry(const BracketVariant& v, const Braiding& psi, const Execution& exec = {});
/// s_ik <a,b,c> + s_ij <b,c,a> + s_jk <c,a,b> = 0 per grade triple.
Report check_cyclic(const BracketVariant& v, const Braiding& psi, const Execution& exec = {});
/// Graded Leibniz rules of the bracket in its last (left) or first (right) slot on
/// grade 4- and 5-tuples, directly and through multiplication operators.
Report check_derivation(const BracketVariant& v, const Braiding& psi, const Execution& exec = {},
                        const SweepOptions& opts = {});

/// Jacobi identity for a bracket closing on the generator span, over generator 5-tuples.
/// Throws ternary.not-closed when some bracket leaves the span.
Report check_jacobi(Side side, const TrilinearMap& bracket, const SpecPtr& spec,
                    const Grading& grading, const Execution& exec = {},
                    const SweepOptions& opts = {});

}  // namespace parabraid
