#pragma once

#include "parabraid/braiding.hpp"
#include "parabraid/error.hpp"
#include "parabraid/green.hpp"
#include "parabraid/parastat.hpp"
#include "parabraid/ternary.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parabraid {

struct SpecViolation {
    std::string pointer;  // JSON pointer, "" for the document root
    std::string message;
};

/// Spec document failed to parse or validate. code() is spec.malformed-json,
/// spec.schema or the module code of a semantic check (e.g. parastat.invalid-form).
class SpecError : public Error {
public:
    SpecError(std::string code, std::vector<SpecViolation> violations);
    const std::vector<SpecViolation>& violations() const { return violations_; }

private:
    std::vector<SpecViolation> violations_;
};

struct SpecOptions {
    int threads = 0;
    std::vector<Signs> variants{Signs::alt, Signs::sym};
    bool derivation = true;
    bool jacobi = true;
    SweepOptions sweep;
    GreenOptions green;
};

struct ArtifactSpec {
    std::string name;
    Grading grading;
    Braiding braiding;
    std::optional<SpeciesSpec> species;
    std::vector<Claim> claims;
    SpecOptions options;
};

ArtifactSpec parse_spec_text(const std::string& text);
/// Throws spec.io when the file cannot be read.
ArtifactSpec parse_spec_file(const std::string& path);

}  // namespace parabraid
