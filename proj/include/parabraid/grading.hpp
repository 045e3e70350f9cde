#pragma once

#include "parabraid/scalar.hpp"

#include <string>
#include <vector>

namespace parabraid {

/// Residues of an element of (Z_n)^k.
using Grade = std::vector<int>;

struct GradeGroup {
    int modulus = 2;
    int rank = 1;

    bool contains(const Grade& g) const;
    void validate(const Grade& g) const;  // throws grading.invalid-grade
    Grade zero() const { return Grade(static_cast<std::size_t>(rank), 0); }
    Grade add(const Grade& a, const Grade& b) const;
    Grade sum(const std::vector<Grade>& gs) const;
    /// All n^k elements in lexicographic order.
    std::vector<Grade> elements() const;
};

/// Square matrix M with sigma(v,w) = v^T M w mod n.
struct SigmaForm {
    std::vector<std::vector<int>> M;
};

struct PhaseConvention {
    int epsilon = 1;  // +1 or -1
    int modulus = 2;
};

int sigma(const GradeGroup& group, const SigmaForm& form, const Grade& v, const Grade& w);

/// All ordered arity-tuples drawn from grades, lexicographic.
std::vector<std::vector<Grade>> grade_tuples(const std::vector<Grade>& grades, std::size_t arity);

/// epsilon * zeta_n^sigma(v,w).
Scalar phase_of(const PhaseConvention& conv, const GradeGroup& group, const SigmaForm& form,
                const Grade& v, const Grade& w);

/// Class label of a Z_2 x Z_2 form, or "unlisted".
std::string classify_z2_form(const SigmaForm& form, int modulus = 2, int rank = 2);

std::string render_grade(const Grade& g);

/// Group, form and convention bundled, with cached phases.
class Grading {
public:
    Grading(GradeGroup group, SigmaForm form, int epsilon);

    const GradeGroup& group() const { return group_; }
    const SigmaForm& form() const { return form_; }
    int epsilon() const { return epsilon_; }
    int modulus() const { return group_.modulus; }
    PhaseConvention convention() const { return {epsilon_, group_.modulus}; }

    int sigma(const Grade& v, const Grade& w) const;
    /// Braiding phase epsilon * zeta^sigma(v,w).
    const Scalar& phase(const Grade& v, const Grade& w) const;
    /// Bicharacter zeta^sigma(v,w) without epsilon.
    const Scalar& twist(const Grade& v, const Grade& w) const;
    const Scalar& zeta_power(int s) const;

    /// sigma(v,w) + sigma(w,v) == 0 mod n for every pair of grades.
    bool is_unitary_form() const;

private:
    GradeGroup group_;
    SigmaForm form_;
    int epsilon_;
    std::vector<Scalar> phases_;
    std::vector<Scalar> twists_;
};

}  // namespace parabraid
