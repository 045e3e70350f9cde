#pragma once

#include "parabraid/freealg.hpp"
#include "parabraid/grading.hpp"
#include "parabraid/parallel.hpp"
#include "parabraid/report.hpp"
#include "parabraid/ternary.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parabraid {

struct SpeciesBlock {
    std::string name;
    Grade grade;
    int modes = 1;
    bool daggers = true;
};

/// One entry of the pairing table: Q(X_i, Y_j) = coeff * delta_ij (or coeff for all i, j).
struct QRule {
    std::string left;   // species name, "+" suffix for the dagger
    std::string right;
    Scalar coeff = Scalar(1);
    bool delta = true;
};

/// Parses "delta", "-delta", "<scalar>*delta" or "<scalar>".
QRule parse_q_rule(const std::string& left, const std::string& right, const std::string& value);

/// Asserted relation for a symbolic triple such as (a+_i, a+_j, a_k).
struct Claim {
    std::string label;
    Side side = Side::left;
    std::vector<std::string> triple;
    std::string value;  // e.g. "2*delta(j,k)*a+_i - 2*delta(i,k)*a+_j" or "0"
    std::string form;   // e.g. "[[a+_i,a+_j],a_k]"; empty to skip the form comparison
    bool expect_match = true;
};

/// Generator id of mode `mode` of a species: name + mode + "+" for daggers.
std::string species_generator_id(const std::string& name, int mode, bool dagger);

class SpeciesSpec {
public:
    /// Throws parastat.invalid-form when the table contradicts
    /// Q(b,a) = -phase(|b|,|a|) Q(a,b).
    SpeciesSpec(Grading grading, std::vector<SpeciesBlock> species, std::vector<QRule> rules);

    const Grading& grading() const { return grading_; }
    const SpecPtr& algebra() const { return algebra_; }
    const std::vector<SpeciesBlock>& species() const { return species_; }
    const SpeciesBlock& block(const std::string& name) const;

    Scalar q(Letter x, Letter y) const;
    Scalar q(const std::string& x, const std::string& y) const;
    Element generator(const std::string& id) const { return Element::generator(algebra_, id); }

private:
    Grading grading_;
    std::vector<SpeciesBlock> species_;
    SpecPtr algebra_;
    std::map<std::pair<Letter, Letter>, Scalar> table_;
};

/// Q-realized bracket, extended multilinearly over generator-span arguments.
Element bracket_via_q(Side side, const SpeciesSpec& spec, const Element& a, const Element& b,
                      const Element& c);

/// Tensor part (alternating bracket) minus the Q part: the ideal generator for the triple.
Element ideal_generator(Side side, const SpeciesSpec& spec, const Element& a, const Element& b,
                        const Element& c);

/// Nested commutator/anticommutator rendering selected by the grade pattern.
std::string commutator_form(Side side, const Grading& grading, const std::vector<Grade>& grades,
                            const std::vector<std::string>& names);

struct RelationRow {
    std::vector<std::string> triple;
    Side side = Side::left;
    Element value;
    std::string form;
};

std::vector<RelationRow> relation_table(const SpeciesSpec& spec, Side side, const Execution& exec = {});
std::string relation_table_jsonl(const std::vector<RelationRow>& rows);
std::string relation_table_text(const std::vector<RelationRow>& rows);

/// Evaluates a claimed value (over every mode assignment) and form against the
/// Q-realized bracket. Verdict check id "claim", subject = label.
Report check_claims(const SpeciesSpec& spec, const std::vector<Claim>& claims);

/// Jacobi sweep for the Q-realized bracket on one side.
Report check_realized_jacobi(const SpeciesSpec& spec, Side side, const Execution& exec = {},
                             const SweepOptions& opts = {});

}  // namespace parabraid
