#include "parabraid/grading.hpp"

#include "parabraid/error.hpp"

#include <array>

namespace parabraid {

namespace {

int mod(long x, int n) {
    long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

bool GradeGroup::contains(const Grade& g) const {
    if (g.size() != static_cast<std::size_t>(rank)) return false;
    for (int r : g) {
        if (r < 0 || r >= modulus) return false;
    }
    return true;
}

void GradeGroup::validate(const Grade& g) const {
    if (!contains(g)) {
        throw Error("grading.invalid-grade", "grade " + render_grade(g) + " is not in (Z_" +
                                                 std::to_string(modulus) + ")^" +
                                                 std::to_string(rank));
    }
}

Grade GradeGroup::add(const Grade& a, const Grade& b) const {
    Grade out(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % modulus;
    return out;
}

Grade GradeGroup::sum(const std::vector<Grade>& gs) const {
    Grade out = zero();
    for (const auto& g : gs) out = add(out, g);
    return out;
}

std::vector<Grade> GradeGroup::elements() const {
    std::vector<Grade> out;
    Grade g = zero();
    while (true) {
        out.push_back(g);
        int pos = rank - 1;
        while (pos >= 0 && ++g[static_cast<std::size_t>(pos)] == modulus) {
            g[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<std::vector<Grade>> grade_tuples(const std::vector<Grade>& grades, std::size_t arity) {
    std::vector<std::vector<Grade>> out;
    std::vector<std::size_t> idx(arity, 0);
    if (grades.empty()) return out;
    while (true) {
        std::vector<Grade> t;
        t.reserve(arity);
        for (auto i : idx) t.push_back(grades[i]);
        out.push_back(std::move(t));
        std::size_t pos = arity;
        while (pos > 0 && ++idx[pos - 1] == grades.size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

int sigma(const GradeGroup& group, const SigmaForm& form, const Grade& v, const Grade& w) {
    const auto k = static_cast<std::size_t>(group.rank);
    if (form.M.size() != k || v.size() != k || w.size() != k) {
        throw Error("grading.shape", "sigma: dimension mismatch");
    }
    long acc = 0;
    for (std::size_t r = 0; r < k; ++r) {
        if (form.M[r].size() != k) throw Error("grading.shape", "sigma: M is not square");
        for (std::size_t c = 0; c < k; ++c) acc += static_cast<long>(v[r]) * form.M[r][c] * w[c];
    }
    return mod(acc, group.modulus);
}

Scalar phase_of(const PhaseConvention& conv, const GradeGroup& group, const SigmaForm& form,
                const Grade& v, const Grade& w) {
    Scalar z = Scalar::root_of_unity(sigma(group, form, v, w), conv.modulus);
    return conv.epsilon < 0 ? -z : z;
}

std::string classify_z2_form(const SigmaForm& form, int modulus, int rank) {
    if (modulus != 2 || rank != 2 || form.M.size() != 2 || form.M[0].size() != 2 ||
        form.M[1].size() != 2) {
        throw Error("grading.unsupported-classification",
                    "classification is defined only for 2x2 forms over Z_2");
    }
    using Mat = std::array<int, 4>;
    struct Entry {
        Mat m;
        const char* label;
    };
    static const Entry table[] = {
        {{1, 0, 0, 1}, "color-superalgebra-C(2,s)"},
        {{1, 1, 1, 0}, "color-superalgebra-C(2,s)"},
        {{0, 1, 1, 1}, "color-superalgebra-C(2,s)"},
        {{1, 0, 0, 0}, "Lie-superalgebra-C(1,s)"},
        {{0, 0, 0, 1}, "Lie-superalgebra-C(1,s)"},
        {{1, 1, 1, 1}, "Lie-superalgebra-C(1,s)"},
        {{0, 1, 1, 0}, "color-algebra-C(2,a)"},
        {{0, 0, 0, 0}, "Lie-algebra"},
    };
    Mat key{mod(form.M[0][0], 2), mod(form.M[0][1], 2), mod(form.M[1][0], 2), mod(form.M[1][1], 2)};
    for (const auto& e : table) {
        if (e.m == key) return e.label;
    }
    return "unlisted";
}

std::string render_grade(const Grade& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g[i]);
    }
    return out + ")";
}

Grading::Grading(GradeGroup group, SigmaForm form, int epsilon)
    : group_(group), form_(std::move(form)), epsilon_(epsilon) {
    if (group_.modulus < 1 || group_.rank < 1) {
        throw Error("grading.shape", "group needs modulus >= 1 and rank >= 1");
    }
    if (epsilon_ != 1 && epsilon_ != -1) throw Error("grading.epsilon", "epsilon must be +1 or -1");
    const auto k = static_cast<std::size_t>(group_.rank);
    if (form_.M.size() != k) throw Error("grading.shape", "M must be rank x rank");
    for (auto& row : form_.M) {
        if (row.size() != k) throw Error("grading.shape", "M must be rank x rank");
        for (int& x : row) x = mod(x, group_.modulus);
    }
    for (int s = 0; s < group_.modulus; ++s) {
        twists_.push_back(Scalar::root_of_unity(s, group_.modulus));
        phases_.push_back(epsilon_ < 0 ? -twists_.back() : twists_.back());
    }
}

int Grading::sigma(const Grade& v, const Grade& w) const {
    return parabraid::sigma(group_, form_, v, w);
}

const Scalar& Grading::phase(const Grade& v, const Grade& w) const {
    return phases_[static_cast<std::size_t>(sigma(v, w))];
}

const Scalar& Grading::twist(const Grade& v, const Grade& w) const {
    return twists_[static_cast<std::size_t>(sigma(v, w))];
}

const Scalar& Grading::zeta_power(int s) const {
    return twists_[static_cast<std::size_t>(mod(s, group_.modulus))];
}

bool Grading::is_unitary_form() const {
    const auto all = group_.elements();
    for (const auto& v : all) {
        for (const auto& w : all) {
            if ((sigma(v, w) + sigma(w, v)) % group_.modulus != 0) return false;
        }
    }
    return true;
}

}  // namespace parabraid
