#pragma once

#include "parabraid/grading.hpp"
#include "parabraid/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace parabraid {

struct SpeciesTag {
    std::string species;
    bool dagger = false;
    int mode = 1;
};

struct Generator {
    std::string id;
    Grade grade;
    std::optional<SpeciesTag> tag;
    /// Position inside the homogeneous component of its grade (matrix braidings).
    int basis_index = 0;
};

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Generator set of a free graded algebra. Letters index generators sorted by id.
class AlgebraSpec {
public:
    AlgebraSpec(GradeGroup group, std::vector<Generator> generators);

    const GradeGroup& group() const { return group_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& generator(Letter l) const { return gens_.at(l); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<Letter> find(const std::string& id) const;
    Letter letter(const std::string& id) const;  // throws freealg.unknown-generator
    std::optional<Letter> find_basis(const Grade& g, int basis_index) const;
    Grade grade_of(const Word& w) const;
    std::string render_word(const Word& w) const;

private:
    GradeGroup group_;
    std::vector<Generator> gens_;
    std::map<std::string, Letter> by_id_;
    std::map<std::pair<Grade, int>, Letter> by_basis_;
};

using SpecPtr = std::shared_ptr<const AlgebraSpec>;

/// Finite linear combination of words, with no stored zero coefficient.
class Element {
public:
    using Terms = std::map<Word, Scalar>;

    explicit Element(SpecPtr spec) : spec_(std::move(spec)) {}

    static Element word(SpecPtr spec, Word w, const Scalar& coeff = Scalar(1));
    static Element generator(SpecPtr spec, const std::string& id);
    static Element unit(SpecPtr spec) { return word(std::move(spec), {}); }

    const SpecPtr& spec() const { return spec_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& coeff);
    void add_term(Word&& w, Scalar&& coeff);

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element operator-() const;
    Element scaled(const Scalar& s) const;

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(const Scalar& s, const Element& x) { return x.scaled(s); }
    /// Concatenation product of the tensor algebra.
    friend Element operator*(const Element& lhs, const Element& rhs);
    friend bool operator==(const Element& lhs, const Element& rhs);

    /// Common total grade of all words; nullopt when inhomogeneous. Zero element has zero grade.
    std::optional<Grade> grade_of() const;
    /// Grade or throws ternary.grade-style error with the given code.
    Grade homogeneous_grade(const std::string& code) const;
    /// Common word length; nullopt when mixed or zero.
    std::optional<std::size_t> degree() const;

    std::string str() const;

private:
    SpecPtr spec_;
    Terms terms_;

    void check_same_spec(const Element& other) const;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace parabraid
