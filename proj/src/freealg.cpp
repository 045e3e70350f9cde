#include "parabraid/freealg.hpp"

#include "parabraid/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace parabraid {

AlgebraSpec::AlgebraSpec(GradeGroup group, std::vector<Generator> generators)
    : group_(group), gens_(std::move(generators)) {
    if (gens_.size() > std::numeric_limits<Letter>::max()) {
        throw Error("freealg.too-many-generators", "too many generators");
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const Generator& a, const Generator& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.id.empty()) throw Error("freealg.invalid-id", "generator id must be non-empty");
        group_.validate(g.grade);
        auto l = static_cast<Letter>(i);
        if (!by_id_.emplace(g.id, l).second) {
            throw Error("freealg.duplicate-id", "duplicate generator id '" + g.id + "'");
        }
        if (!by_basis_.emplace(std::make_pair(g.grade, g.basis_index), l).second) {
            throw Error("freealg.duplicate-basis",
                        "two generators share grade " + render_grade(g.grade) + " and basis index " +
                            std::to_string(g.basis_index));
        }
    }
}

std::optional<Letter> AlgebraSpec::find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

Letter AlgebraSpec::letter(const std::string& id) const {
    if (auto l = find(id)) return *l;
    throw Error("freealg.unknown-generator", "unknown generator '" + id + "'");
}

std::optional<Letter> AlgebraSpec::find_basis(const Grade& g, int basis_index) const {
    auto it = by_basis_.find({g, basis_index});
    if (it == by_basis_.end()) return std::nullopt;
    return it->second;
}

Grade AlgebraSpec::grade_of(const Word& w) const {
    Grade g = group_.zero();
    for (Letter l : w) g = group_.add(g, gens_[l].grade);
    return g;
}

std::string AlgebraSpec::render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += gens_[w[i]].id;
    }
    return out;
}

Element Element::word(SpecPtr spec, Word w, const Scalar& coeff) {
    Element e(std::move(spec));
    e.add_term(w, coeff);
    return e;
}

Element Element::generator(SpecPtr spec, const std::string& id) {
    Letter l = spec->letter(id);
    return word(std::move(spec), Word{l});
}

void Element::add_term(const Word& w, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add_term(Word&& w, Scalar&& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.lower_bound(w);
    if (it == terms_.end() || it->first != w) {
        terms_.emplace_hint(it, std::move(w), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::check_same_spec(const Element& other) const {
    if (spec_ != other.spec_) {
        throw Error("freealg.spec-mismatch", "elements belong to different algebra specs");
    }
}

Element& Element::operator+=(const Element& rhs) {
    check_same_spec(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    check_same_spec(rhs);
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

Element Element::operator-() const { return scaled(Scalar(-1)); }

Element Element::scaled(const Scalar& s) const {
    Element out(spec_);
    if (s.is_zero()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, c * s);
    return out;
}

Element operator*(const Element& lhs, const Element& rhs) {
    lhs.check_same_spec(rhs);
    Element out(lhs.spec_);
    for (const auto& [wl, cl] : lhs.terms_) {
        for (const auto& [wr, cr] : rhs.terms_) {
            Word w = wl;
            w.insert(w.end(), wr.begin(), wr.end());
            out.add_term(w, cl * cr);
        }
    }
    return out;
}

bool operator==(const Element& lhs, const Element& rhs) {
    lhs.check_same_spec(rhs);
    return lhs.terms_ == rhs.terms_;
}

std::optional<Grade> Element::grade_of() const {
    if (terms_.empty()) return spec_->group().zero();
    std::optional<Grade> g;
    for (const auto& [w, c] : terms_) {
        Grade gw = spec_->grade_of(w);
        if (!g) {
            g = gw;
        } else if (*g != gw) {
            return std::nullopt;
        }
    }
    return g;
}

Grade Element::homogeneous_grade(const std::string& code) const {
    auto g = grade_of();
    if (!g) throw Error(code, "element " + str() + " is not homogeneous");
    return *g;
}

std::optional<std::size_t> Element::degree() const {
    std::optional<std::size_t> d;
    for (const auto& [w, c] : terms_) {
        if (!d) {
            d = w.size();
        } else if (*d != w.size()) {
            return std::nullopt;
        }
    }
    return d;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string coeff;
        std::string word = spec_->render_word(w);
        bool bare_word = !w.empty();
        if (c.is_one() && bare_word) {
            coeff.clear();
        } else if (c == Scalar(-1) && bare_word) {
            coeff = "-";
        } else {
            std::string cs = c.str();
            bool compound = cs.find('+') != std::string::npos;
            coeff = compound ? "(" + cs + ")" : cs;
            if (bare_word) coeff += '*';
        }
        if (!out.empty()) out += " + ";
        out += coeff;
        if (bare_word) out += word;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.str(); }

}  // namespace parabraid
