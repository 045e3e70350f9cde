#include "parabraid/spec_io.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace parabraid {

namespace {

using nlohmann::json;

std::string join_violations(const std::vector<SpecViolation>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += "\n";
        out += (v.pointer.empty() ? "/" : v.pointer) + ": " + v.message;
    }
    return out;
}

class Validator {
public:
    std::vector<SpecViolation> errors;

    void fail(const std::string& ptr, const std::string& msg) { errors.push_back({ptr, msg}); }

    const json* member(const json& obj, const std::string& ptr, const std::string& key, bool required) {
        if (!obj.is_object()) {
            fail(ptr, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) fail(ptr + "/" + key, "required member missing");
            return nullptr;
        }
        return &*it;
    }

    std::optional<long> integer(const json* j, const std::string& ptr) {
        if (!j) return std::nullopt;
        if (!j->is_number_integer()) {
            fail(ptr, "expected an integer");
            return std::nullopt;
        }
        return j->get<long>();
    }

    std::optional<std::string> string(const json* j, const std::string& ptr) {
        if (!j) return std::nullopt;
        if (!j->is_string()) {
            fail(ptr, "expected a string");
            return std::nullopt;
        }
        return j->get<std::string>();
    }

    std::optional<bool> boolean(const json* j, const std::string& ptr) {
        if (!j) return std::nullopt;
        if (!j->is_boolean()) {
            fail(ptr, "expected a boolean");
            return std::nullopt;
        }
        return j->get<bool>();
    }

    std::optional<Scalar> scalar(const json* j, const std::string& ptr) {
        if (!j) return std::nullopt;
        try {
            if (j->is_number_integer()) return Scalar(j->get<long>());
            if (j->is_string()) return Scalar::parse(j->get<std::string>());
        } catch (const Error& e) {
            fail(ptr, e.what());
            return std::nullopt;
        }
        fail(ptr, "expected an integer or a scalar string");
        return std::nullopt;
    }

    std::optional<Grade> grade(const json* j, const std::string& ptr, const GradeGroup& group) {
        if (!j) return std::nullopt;
        if (!j->is_array()) {
            fail(ptr, "expected an array of residues");
            return std::nullopt;
        }
        Grade g;
        for (std::size_t i = 0; i < j->size(); ++i) {
            auto v = integer(&(*j)[i], ptr + "/" + std::to_string(i));
            if (!v) return std::nullopt;
            g.push_back(static_cast<int>(*v));
        }
        if (!group.contains(g)) {
            fail(ptr, "grade " + render_grade(g) + " is not an element of (Z_" + std::to_string(group.modulus) + ")^" +
                          std::to_string(group.rank));
            return std::nullopt;
        }
        return g;
    }
};

const std::set<std::string> kTopLevel = {"schema",  "name",   "group",  "M",      "epsilon",
                                         "braiding", "species", "Q", "claims", "options"};

Braiding parse_braiding(Validator& v, const json& root, const Grading& grading) {
    const json* b = v.member(root, "", "braiding", false);
    if (!b) return Braiding::diagonal(grading);
    auto kind = v.string(v.member(*b, "/braiding", "kind", true), "/braiding/kind");
    if (!kind) return Braiding::diagonal(grading);
    if (*kind == "diagonal") return Braiding::diagonal(grading);
    if (*kind != "matrix") {
        v.fail("/braiding/kind", "expected \"diagonal\" or \"matrix\"");
        return Braiding::diagonal(grading);
    }
    std::map<Grade, int> dims;
    const json* jd = v.member(*b, "/braiding", "dims", true);
    if (jd && !jd->is_array()) v.fail("/braiding/dims", "expected an array");
    if (jd && jd->is_array()) {
        for (std::size_t i = 0; i < jd->size(); ++i) {
            const std::string p = "/braiding/dims/" + std::to_string(i);
            auto g = v.grade(v.member((*jd)[i], p, "grade", true), p + "/grade", grading.group());
            auto d = v.integer(v.member((*jd)[i], p, "dim", true), p + "/dim");
            if (d && (*d < 0 || *d > 8)) v.fail(p + "/dim", "dimension must lie in 0..8");
            if (g && d) dims[*g] = static_cast<int>(*d);
        }
    }
    std::vector<MatrixComponent> comps;
    const json* jc = v.member(*b, "/braiding", "components", true);
    if (jc && !jc->is_array()) v.fail("/braiding/components", "expected an array");
    if (jc && jc->is_array()) {
        for (std::size_t i = 0; i < jc->size(); ++i) {
            const std::string p = "/braiding/components/" + std::to_string(i);
            const json* jg = v.member((*jc)[i], p, "grades", true);
            if (!jg) continue;
            if (!jg->is_array() || jg->size() != 2) {
                v.fail(p + "/grades", "expected a pair of grades");
                continue;
            }
            auto l = v.grade(&(*jg)[0], p + "/grades/0", grading.group());
            auto r = v.grade(&(*jg)[1], p + "/grades/1", grading.group());
            if (!l || !r) continue;
            const int dl = dims.count(*l) ? dims[*l] : 0;
            const int dr = dims.count(*r) ? dims[*r] : 0;
            MatrixComponent c(*l, *r, dl, dr);
            const json* je = v.member((*jc)[i], p, "entries", true);
            if (!je) continue;
            if (!je->is_array()) {
                v.fail(p + "/entries", "expected an array");
                continue;
            }
            for (std::size_t e = 0; e < je->size(); ++e) {
                const std::string pe = p + "/entries/" + std::to_string(e);
                const json* in = v.member((*je)[e], pe, "in", true);
                const json* out = v.member((*je)[e], pe, "out", true);
                auto val = v.scalar(v.member((*je)[e], pe, "value", true), pe + "/value");
                auto idx_pair = [&](const json* j, const std::string& ptr, int d0, int d1) -> std::optional<std::pair<int, int>> {
                    if (!j) return std::nullopt;
                    if (!j->is_array() || j->size() != 2 || !(*j)[0].is_number_integer() || !(*j)[1].is_number_integer()) {
                        v.fail(ptr, "expected a pair of basis indices");
                        return std::nullopt;
                    }
                    int a = (*j)[0].get<int>(), bb = (*j)[1].get<int>();
                    if (a < 0 || a >= d0 || bb < 0 || bb >= d1) {
                        v.fail(ptr, "basis index out of range");
                        return std::nullopt;
                    }
                    return std::make_pair(a, bb);
                };
                auto ij = idx_pair(in, pe + "/in", dl, dr);
                auto mn = idx_pair(out, pe + "/out", dr, dl);
                if (ij && mn && val) c.at(ij->first, ij->second, mn->first, mn->second) = *val;
            }
            comps.push_back(std::move(c));
        }
    }
    if (!v.errors.empty()) return Braiding::diagonal(grading);
    try {
        return Braiding::matrix(grading, dims, comps);
    } catch (const Error& e) {
        v.fail("/braiding", e.what());
        return Braiding::diagonal(grading);
    }
}

}  // namespace

SpecError::SpecError(std::string code, std::vector<SpecViolation> violations)
    : Error(std::move(code), join_violations(violations)), violations_(std::move(violations)) {}

ArtifactSpec parse_spec_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError("spec.malformed-json", {{"", e.what()}});
    }
    Validator v;
    if (!root.is_object()) throw SpecError("spec.schema", {{"", "spec must be a JSON object"}});
    for (const auto& [k, _] : root.items()) {
        if (!kTopLevel.count(k)) v.fail("/" + k, "unknown member");
    }
    auto schema = v.string(v.member(root, "", "schema", true), "/schema");
    if (schema && *schema != "1") v.fail("/schema", "unsupported schema version \"" + *schema + "\"");
    auto name = v.string(v.member(root, "", "name", true), "/name");

    GradeGroup group;
    const json* jg = v.member(root, "", "group", true);
    if (jg) {
        auto n = v.integer(v.member(*jg, "/group", "modulus", true), "/group/modulus");
        auto k = v.integer(v.member(*jg, "/group", "rank", true), "/group/rank");
        if (n && (*n < 2 || *n > 64)) v.fail("/group/modulus", "modulus must lie in 2..64");
        if (k && (*k < 1 || *k > 4)) v.fail("/group/rank", "rank must lie in 1..4");
        if (n) group.modulus = static_cast<int>(*n);
        if (k) group.rank = static_cast<int>(*k);
    }
    SigmaForm form;
    const json* jm = v.member(root, "", "M", true);
    if (jm) {
        if (!jm->is_array() || jm->size() != static_cast<std::size_t>(group.rank)) {
            v.fail("/M", "expected a " + std::to_string(group.rank) + "x" + std::to_string(group.rank) + " matrix");
        } else {
            for (std::size_t i = 0; i < jm->size(); ++i) {
                const json& row = (*jm)[i];
                const std::string p = "/M/" + std::to_string(i);
                if (!row.is_array() || row.size() != static_cast<std::size_t>(group.rank)) {
                    v.fail(p, "expected a row of " + std::to_string(group.rank) + " residues");
                    continue;
                }
                std::vector<int> r;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    auto x = v.integer(&row[j], p + "/" + std::to_string(j));
                    if (x && (*x < 0 || *x >= group.modulus)) v.fail(p + "/" + std::to_string(j), "entry must lie in 0..n-1");
                    r.push_back(x ? static_cast<int>(*x) : 0);
                }
                form.M.push_back(std::move(r));
            }
        }
    }
    auto eps = v.integer(v.member(root, "", "epsilon", true), "/epsilon");
    if (eps && *eps != 1 && *eps != -1) v.fail("/epsilon", "epsilon must be 1 or -1");
    if (!v.errors.empty()) throw SpecError("spec.schema", v.errors);

    Grading grading(group, form, static_cast<int>(*eps));
    Braiding braiding = parse_braiding(v, root, grading);

    std::vector<SpeciesBlock> blocks;
    const json* js = v.member(root, "", "species", false);
    if (js && !js->is_array()) v.fail("/species", "expected an array");
    if (js && js->is_array()) {
        for (std::size_t i = 0; i < js->size(); ++i) {
            const std::string p = "/species/" + std::to_string(i);
            SpeciesBlock b;
            auto nm = v.string(v.member((*js)[i], p, "name", true), p + "/name");
            auto g = v.grade(v.member((*js)[i], p, "grade", true), p + "/grade", group);
            auto m = v.integer(v.member((*js)[i], p, "modes", false), p + "/modes");
            auto d = v.boolean(v.member((*js)[i], p, "daggers", false), p + "/daggers");
            if (m && (*m < 1 || *m > 16)) v.fail(p + "/modes", "modes must lie in 1..16");
            if (nm) b.name = *nm;
            if (g) b.grade = *g;
            if (m) b.modes = static_cast<int>(*m);
            if (d) b.daggers = *d;
            blocks.push_back(std::move(b));
        }
    }
    std::vector<QRule> rules;
    const json* jq = v.member(root, "", "Q", false);
    if (jq && !js) v.fail("/Q", "a pairing needs a species block");
    if (jq && !jq->is_array()) v.fail("/Q", "expected an array");
    if (jq && jq->is_array()) {
        for (std::size_t i = 0; i < jq->size(); ++i) {
            const std::string p = "/Q/" + std::to_string(i);
            const json* pair = v.member((*jq)[i], p, "pair", true);
            auto val = v.string(v.member((*jq)[i], p, "value", true), p + "/value");
            if (!pair) continue;
            if (!pair->is_array() || pair->size() != 2 || !(*pair)[0].is_string() || !(*pair)[1].is_string()) {
                v.fail(p + "/pair", "expected two species names");
                continue;
            }
            if (!val) continue;
            try {
                rules.push_back(parse_q_rule((*pair)[0].get<std::string>(), (*pair)[1].get<std::string>(), *val));
            } catch (const Error& e) {
                v.fail(p + "/value", e.what());
            }
        }
    }

    std::vector<Claim> claims;
    const json* jcl = v.member(root, "", "claims", false);
    if (jcl && !js) v.fail("/claims", "claims need a species block");
    if (jcl && !jcl->is_array()) v.fail("/claims", "expected an array");
    if (jcl && jcl->is_array()) {
        for (std::size_t i = 0; i < jcl->size(); ++i) {
            const std::string p = "/claims/" + std::to_string(i);
            const json& c = (*jcl)[i];
            Claim claim;
            auto label = v.string(v.member(c, p, "label", true), p + "/label");
            auto side = v.string(v.member(c, p, "side", true), p + "/side");
            auto value = v.string(v.member(c, p, "value", true), p + "/value");
            auto form_s = v.string(v.member(c, p, "form", false), p + "/form");
            auto expect = v.string(v.member(c, p, "expect", false), p + "/expect");
            const json* tr = v.member(c, p, "triple", true);
            if (tr) {
                if (!tr->is_array() || tr->size() != 3) {
                    v.fail(p + "/triple", "expected three symbols");
                } else {
                    for (std::size_t t = 0; t < 3; ++t) {
                        auto s = v.string(&(*tr)[t], p + "/triple/" + std::to_string(t));
                        if (s) claim.triple.push_back(*s);
                    }
                }
            }
            if (label) claim.label = *label;
            if (side) {
                if (*side == "left") claim.side = Side::left;
                else if (*side == "right") claim.side = Side::right;
                else v.fail(p + "/side", "expected \"left\" or \"right\"");
            }
            if (value) claim.value = *value;
            if (form_s) claim.form = *form_s;
            if (expect) {
                if (*expect == "match") claim.expect_match = true;
                else if (*expect == "deviation") claim.expect_match = false;
                else v.fail(p + "/expect", "expected \"match\" or \"deviation\"");
            }
            claims.push_back(std::move(claim));
        }
    }

    SpecOptions opts;
    const json* jo = v.member(root, "", "options", false);
    if (jo && !jo->is_object()) v.fail("/options", "expected an object");
    if (jo && jo->is_object()) {
        static const std::set<std::string> known = {"threads", "variants", "derivation", "jacobi",
                                                    "max_tuples", "seed", "green"};
        for (const auto& [k, _] : jo->items()) {
            if (!known.count(k)) v.fail("/options/" + k, "unknown option");
        }
        if (auto t = v.integer(v.member(*jo, "/options", "threads", false), "/options/threads")) {
            if (*t < 0) v.fail("/options/threads", "threads must be >= 0");
            opts.threads = static_cast<int>(*t);
        }
        if (const json* jv = v.member(*jo, "/options", "variants", false)) {
            opts.variants.clear();
            if (!jv->is_array()) v.fail("/options/variants", "expected an array");
            else {
                for (std::size_t i = 0; i < jv->size(); ++i) {
                    auto s = v.string(&(*jv)[i], "/options/variants/" + std::to_string(i));
                    if (s && *s == "alt") opts.variants.push_back(Signs::alt);
                    else if (s && *s == "sym") opts.variants.push_back(Signs::sym);
                    else if (s) v.fail("/options/variants/" + std::to_string(i), "expected \"alt\" or \"sym\"");
                }
            }
        }
        if (auto d = v.boolean(v.member(*jo, "/options", "derivation", false), "/options/derivation")) opts.derivation = *d;
        if (auto d = v.boolean(v.member(*jo, "/options", "jacobi", false), "/options/jacobi")) opts.jacobi = *d;
        if (auto m = v.integer(v.member(*jo, "/options", "max_tuples", false), "/options/max_tuples")) {
            if (*m < 1) v.fail("/options/max_tuples", "must be positive");
            else opts.sweep.max_tuples = static_cast<std::size_t>(*m);
        }
        if (auto s = v.integer(v.member(*jo, "/options", "seed", false), "/options/seed")) {
            opts.sweep.seed = static_cast<std::uint64_t>(*s);
        }
        if (const json* jgr = v.member(*jo, "/options", "green", false)) {
            if (auto o = v.integer(v.member(*jgr, "/options/green", "order", false), "/options/green/order")) {
                if (*o < 1 || *o > 4) v.fail("/options/green/order", "order must lie in 1..4");
                opts.green.order = static_cast<int>(*o);
            }
            if (auto c = v.integer(v.member(*jgr, "/options/green", "cutoff", false), "/options/green/cutoff")) {
                if (*c < 3) v.fail("/options/green/cutoff", "cutoff must be at least 3");
                opts.green.cutoff = static_cast<int>(*c);
            }
            if (auto m = v.integer(v.member(*jgr, "/options/green", "modes", false), "/options/green/modes")) {
                if (*m < 0) v.fail("/options/green/modes", "modes must be >= 0");
                opts.green.modes = static_cast<int>(*m);
            }
        }
    }
    if (!v.errors.empty()) throw SpecError("spec.schema", v.errors);

    std::optional<SpeciesSpec> species;
    if (js) {
        try {
            species.emplace(grading, blocks, rules);
        } catch (const Error& e) {
            const std::string ptr = e.code().rfind("parastat.invalid-form", 0) == 0 ? "/Q" : "/species";
            throw SpecError(e.code(), {{ptr, e.what()}});
        }
    }
    return ArtifactSpec{name.value_or(""), grading, braiding, std::move(species), std::move(claims), opts};
}

ArtifactSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("spec.io", {{"", "cannot read " + path}});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

}  // namespace parabraid
