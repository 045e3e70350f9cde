#pragma once

#include "parabraid/parallel.hpp"
#include "parabraid/parastat.hpp"
#include "parabraid/report.hpp"

#include <cstdint>
#include <string>

namespace parabraid {

/// How operators of different Green components relate.
enum class CrossRule {
    opposite,  // anticommute iff they would commute inside one component
    same,      // same relation as inside one component
};

std::string cross_rule_name(CrossRule r);

struct GreenOptions {
    int order = 1;   // p, number of Green components
    int cutoff = 6;  // per-mode boson occupation bound
    int modes = 0;   // 0 keeps every declared mode
};

struct GreenSpace {
    std::size_t elementary_modes = 0;
    std::uint64_t dimension = 0;    // full truncated space
    std::uint64_t checked_states = 0;
};

/// Describes the Fock space the oracle would build, without checking anything.
GreenSpace green_space(const SpeciesSpec& spec, const GreenOptions& opts);

/// Checks every generator triple's ideal generator (alternating tensor part minus Q part,
/// on the requested side) as an operator identity on explicit Green-component Fock states.
Report green_check_rule(const SpeciesSpec& spec, Side side, const GreenOptions& opts, CrossRule rule,
                        const Execution& exec = {});

/// At order >= 2 both cross-component rules are tried on the single-species relations
/// of the first species and exactly one must hold; throws parastat.green-ansatz otherwise.
CrossRule select_cross_rule(const SpeciesSpec& spec, const GreenOptions& opts, const Execution& exec = {});

/// Self-validation followed by the full check on both sides.
Report green_ansatz_check(const SpeciesSpec& spec, const GreenOptions& opts, const Execution& exec = {});

}  // namespace parabraid
