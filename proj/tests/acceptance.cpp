// One line per acceptance criterion; exit status 1 when any criterion fails.
#include "parabraid/braiding.hpp"
#include "parabraid/error.hpp"
#include "parabraid/green.hpp"
#include "parabraid/parastat.hpp"
#include "parabraid/schur.hpp"
#include "parabraid/spec_io.hpp"
#include "parabraid/ternary.hpp"
#include "support/oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace parabraid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail, double secs, double limit = 0) {
    const bool in_time = limit <= 0 || secs < limit;
    const bool pass = ok && in_time;
    if (!pass) ++failures;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs << " s";
    if (limit > 0) t << " of " << limit << " s";
    std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << "  " << title << ": " << detail << " ["
              << t.str() << (in_time ? "" : ", over the time limit") << "]\n";
}

void info(const std::string& text) { std::cout << "    info: " << text << "\n"; }

std::vector<oracle::Form> forms(int n, int k, std::size_t max_count, std::mt19937_64& rng) {
    std::vector<oracle::Form> all;
    for (const auto& flat : oracle::group_elements(n, k * k)) {
        oracle::Form M(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) M[r][c] = flat[static_cast<std::size_t>(r * k + c)];
        all.push_back(M);
    }
    if (all.size() <= max_count) return all;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(max_count);
    return all;
}

std::vector<oracle::Form> z2_forms() {
    std::mt19937_64 rng(0);
    return forms(2, 2, 16, rng);
}

bool symmetric(const oracle::Form& M) {
    for (std::size_t r = 0; r < M.size(); ++r)
        for (std::size_t c = 0; c < M.size(); ++c)
            if (M[r][c] != M[c][r]) return false;
    return true;
}

std::string render(const oracle::Form& M) {
    std::string s = "[";
    for (std::size_t r = 0; r < M.size(); ++r) {
        s += r ? ",[" : "[";
        for (std::size_t c = 0; c < M.size(); ++c) s += (c ? "," : "") + std::to_string(M[r][c]);
        s += "]";
    }
    return s + "]";
}

Grading grading_of(int n, const oracle::Form& M, int eps) {
    return Grading(GradeGroup{n, static_cast<int>(M.size())}, SigmaForm{M}, eps);
}

std::string sample(const std::string& name) { return std::string(PARABRAID_SAMPLES_DIR) + "/" + name + ".json"; }

void criterion1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    std::size_t braidings = 0, yb_bad = 0, unit_bad = 0;
    for (int n : {2, 3, 4})
        for (int k : {1, 2})
            for (const auto& M : forms(n, k, 50, rng))
                for (int eps : {1, -1}) {
                    Braiding psi = Braiding::diagonal(grading_of(n, M, eps));
                    ++braidings;
                    if (!check_yang_baxter(psi).all_pass()) ++yb_bad;
                    bool want = true;
                    for (const auto& v : oracle::group_elements(n, k))
                        for (const auto& w : oracle::group_elements(n, k))
                            want = want && (oracle::sigma(M, v, w, n) + oracle::sigma(M, w, v, n)) % n == 0;
                    if (check_unitarity(psi).all_pass() != want) ++unit_bad;
                }
    report(1, "braiding axioms", yb_bad == 0 && unit_bad == 0,
           std::to_string(braidings) + " diagonal braidings, Yang-Baxter failures " + std::to_string(yb_bad) +
               ", unitarity iff mismatches " + std::to_string(unit_bad),
           seconds_since(t0), 5);
}

void criterion2() {
    const auto t0 = Clock::now();
    std::size_t runs = 0, clean = 0, sym_runs = 0, sym_clean = 0, unexpected = 0;
    std::vector<std::string> bad_forms;
    for (const auto& M : z2_forms()) {
        bool form_ok = true;
        for (int eps : {1, -1}) {
            Braiding psi = Braiding::diagonal(grading_of(2, M, eps));
            for (Side side : {Side::left, Side::right})
                for (Signs sg : {Signs::alt, Signs::sym}) {
                    Report r = check_symmetry({side, sg}, psi);
                    ++runs;
                    const bool ok = r.all_pass();
                    clean += ok;
                    unexpected += r.count(Status::fail);
                    form_ok = form_ok && ok;
                    if (symmetric(M)) {
                        ++sym_runs;
                        sym_clean += ok;
                    }
                }
        }
        if (!form_ok) bad_forms.push_back(render(M));
    }
    report(2, "bracket symmetries", clean == runs,
           std::to_string(clean) + "/" + std::to_string(runs) + " (M, eps, side, variant) sweeps exact over 64 triples",
           seconds_since(t0), 5);
    std::string list;
    for (const auto& f : bad_forms) list += (list.empty() ? "" : " ") + f;
    info("symmetric M: " + std::to_string(sym_clean) + "/" + std::to_string(sym_runs) +
         " sweeps exact; non-symmetric M with mismatches: " + list);
    info("mismatches occur only on non-unitary grade pairs and are reported as flagged; unflagged failures " +
         std::to_string(unexpected));
}

void criterion3() {
    const auto t0 = Clock::now();
    std::size_t runs = 0, clean = 0, sym_runs = 0, sym_clean = 0;
    for (const auto& M : z2_forms())
        for (int eps : {1, -1}) {
            Braiding psi = Braiding::diagonal(grading_of(2, M, eps));
            for (Side side : {Side::left, Side::right}) {
                const bool ok = check_cyclic({side, Signs::alt}, psi).all_pass();
                ++runs;
                clean += ok;
                if (symmetric(M)) {
                    ++sym_runs;
                    sym_clean += ok;
                }
            }
        }
    // all-plus variant at sigma = 0: residual is twice the orbit sum
    const oracle::Form zero{{0, 0}, {0, 0}};
    Grading g = grading_of(2, zero, 1);
    Braiding psi0 = Braiding::diagonal(g);
    SpecPtr s = symbolic_spec(g.group(), 3);
    std::size_t residual_ok = 0, triples = 0;
    for (const auto& t : grade_tuples(g.group().elements(), 3))
        for (Side side : {Side::left, Side::right}) {
            Element a = symbol(s, 0, t[0]), b = symbol(s, 1, t[1]), c = symbol(s, 2, t[2]);
            BracketVariant v{side, Signs::sym};
            Element res = bracket_by_phases(v, g, a, b, c) + bracket_by_phases(v, g, b, c, a) + bracket_by_phases(v, g, c, a, b);
            Element orbit = a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
            ++triples;
            residual_ok += res == Scalar(2) * orbit;
        }
    std::size_t expected_fail = 0;
    for (Side side : {Side::left, Side::right})
        expected_fail += check_cyclic({side, Signs::sym}, psi0).count(Status::expected_fail);
    const bool sym_ok = residual_ok == triples && expected_fail == triples;
    report(3, "cyclic relation", clean == runs && sym_ok,
           "alternating " + std::to_string(clean) + "/" + std::to_string(runs) + " sweeps exact; all-plus at sigma=0 residual = 2*orbit on " +
               std::to_string(residual_ok) + "/" + std::to_string(triples) + " triples, expected-fail verdicts " +
               std::to_string(expected_fail),
           seconds_since(t0));
    info("alternating variant on symmetric M: " + std::to_string(sym_clean) + "/" + std::to_string(sym_runs) +
         " sweeps exact");
}

void criterion4() {
    const auto t0 = Clock::now();
    Braiding id = Braiding::diagonal(grading_of(2, {{1, 0}, {0, 1}}, 1));
    std::size_t verdicts = 0, bad = 0;
    for (Side side : {Side::left, Side::right}) {
        Report r = check_derivation({side, Signs::alt}, id);
        verdicts += r.verdicts().size();
        bad += r.verdicts().size() - r.count(Status::pass);
    }
    std::mt19937_64 rng(404);
    std::size_t combos = 0, combo_bad = 0;
    for (int rep = 0; rep < 220; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 3), k = 1 + static_cast<int>(rng() % 2);
        oracle::Form M(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
        for (auto& row : M)
            for (auto& x : row) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int eps = rng() % 2 ? 1 : -1;
        Braiding psi = Braiding::diagonal(grading_of(n, M, eps));
        SweepOptions few{3, rng()};
        const Side side = rng() % 2 ? Side::left : Side::right;
        Report r = check_derivation({side, Signs::alt}, psi, {}, few);
        combos += r.verdicts().size();
        combo_bad += r.verdicts().size() - r.count(Status::pass);
    }
    report(4, "derivation identities", bad == 0 && combo_bad == 0,
           "M=I2 exhaustive " + std::to_string(verdicts - bad) + "/" + std::to_string(verdicts) + " exact; random grade/M " +
               std::to_string(combos - combo_bad) + "/" + std::to_string(combos) + " exact",
           seconds_since(t0), 30);
}

void criterion5() {
    const auto t0 = Clock::now();
    std::size_t claims = 0, matched = 0;
    for (const std::string name : {"parafermion", "paraboson", "mixed"}) {
        ArtifactSpec a = parse_spec_file(sample(name));
        Report r = check_claims(*a.species, a.claims);
        claims += r.verdicts().size();
        for (std::size_t i = 0; i < a.claims.size(); ++i) {
            const auto st = r.verdicts()[i].status;
            matched += a.claims[i].expect_match ? st == Status::pass : st == Status::flagged;
        }
        // every row of the table must be a generator-span value
        for (Side side : {Side::left, Side::right})
            for (const auto& row : relation_table(*a.species, side))
                if (row.value.degree().value_or(1) != 1) ++claims;
    }
    ArtifactSpec three = parse_spec_file(sample("three_species"));
    Report dev = check_claims(*three.species, three.claims);
    std::size_t want_flagged = 0;
    for (const auto& c : three.claims) want_flagged += !c.expect_match;
    const bool dev_ok = dev.count(Status::flagged) == want_flagged && dev.count(Status::fail) == 0;
    report(5, "parastatistics fixtures", matched == claims && dev_ok,
           std::to_string(matched) + "/" + std::to_string(claims) + " relation rows exact; deviation list " +
               std::to_string(dev.count(Status::flagged)) + " flagged rows, " + std::to_string(dev.count(Status::pass)) +
               " matching",
           seconds_since(t0));
    for (const auto& v : dev.verdicts())
        if (v.status == Status::flagged) info("flagged " + v.subject + ": " + v.note);
}

void criterion6() {
    const auto t0 = Clock::now();
    std::size_t verdicts = 0, bad = 0;
    for (const std::string name : {"parafermion", "paraboson"}) {
        ArtifactSpec a = parse_spec_file(sample(name));
        SweepOptions all{1u << 20, 1};
        for (Side side : {Side::left, Side::right}) {
            Report r = check_realized_jacobi(*a.species, side, {}, all);
            verdicts += r.verdicts().size();
            bad += r.verdicts().size() - r.count(Status::pass);
        }
    }
    report(6, "Jacobi on realized brackets", bad == 0,
           std::to_string(verdicts - bad) + "/" + std::to_string(verdicts) + " generator 5-tuples exact", seconds_since(t0), 60);
}

void criterion7() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string dims;
    for (const std::string name : {"parafermion", "paraboson", "mixed"}) {
        ArtifactSpec a = parse_spec_file(sample(name));
        for (int p : {1, 2}) {
            GreenOptions o{p, 6, 2};
            try {
                Report r = green_ansatz_check(*a.species, o);
                const GreenSpace sp = green_space(*a.species, o);
                ok = ok && r.all_pass();
                if (p == 2) ok = ok && r.count("green-cross-rule", Status::pass) == 1;
                dims += " " + name + "/p" + std::to_string(p) + "=" + std::to_string(sp.dimension) + "(" +
                        std::to_string(sp.checked_states) + " checked)";
            } catch (const Error& e) {
                ok = false;
                dims += " " + name + "/p" + std::to_string(p) + "=error " + e.code();
            }
        }
    }
    report(7, "Green-ansatz oracle", ok, "fixtures exact as operator identities; spaces:" + dims, seconds_since(t0));
}

Braiding swap(int n, const Scalar& lambda) {
    Grading g(GradeGroup{2, 1}, SigmaForm{{{0}}}, 1);
    MatrixComponent c({0}, {0}, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.at(i, j, j, i) = lambda;
    return Braiding::matrix(g, {{{0}, n}}, {c});
}

Braiding hecke(const Scalar& q) {
    Grading g(GradeGroup{2, 1}, SigmaForm{{{0}}}, 1);
    MatrixComponent c({0}, {0}, 2, 2);
    c.at(0, 0, 0, 0) = q;
    c.at(1, 1, 1, 1) = q;
    c.at(0, 1, 1, 0) = Scalar(1);
    c.at(1, 0, 0, 1) = Scalar(1);
    c.at(1, 0, 1, 0) = q - q.inverse();
    return Braiding::matrix(g, {{{0}, 2}}, {c});
}

// Graded swap with an even line and an odd plane.
Braiding super_swap() {
    Grading g(GradeGroup{2, 1}, SigmaForm{{{1}}}, 1);
    const std::map<Grade, int> dims{{{0}, 1}, {{1}, 2}};
    std::vector<MatrixComponent> comps;
    for (const auto& [gl, dl] : dims)
        for (const auto& [gr, dr] : dims) {
            MatrixComponent c(gl, gr, dl, dr);
            const Scalar sgn(gl[0] && gr[0] ? -1 : 1);
            for (int i = 0; i < dl; ++i)
                for (int j = 0; j < dr; ++j) c.at(i, j, j, i) = sgn;
            comps.push_back(c);
        }
    return Braiding::matrix(g, dims, comps);
}

void criterion8() {
    const auto t0 = Clock::now();
    std::size_t runs = 0, clean = 0, sym_runs = 0, sym_clean = 0, unexpected = 0;
    for (const auto& M : z2_forms())
        for (int eps : {1, -1}) {
            Braiding psi = Braiding::diagonal(grading_of(2, M, eps));
            for (Side side : {Side::left, Side::right}) {
                Report r = check_symmetrizer_bracket(psi, side);
                ++runs;
                clean += r.all_pass();
                unexpected += r.count(Status::fail);
                if (symmetric(M)) {
                    ++sym_runs;
                    sym_clean += r.all_pass();
                }
            }
        }
    const std::vector<std::pair<std::string, Braiding>> matrices{
        {"swap dim 2", swap(2, Scalar(1))},
        {"scaled swap dim 2", swap(2, Scalar::root_of_unity(1, 3))},
        {"Hecke q=z3", hecke(Scalar::root_of_unity(1, 3))},
        {"Hecke q=2", hecke(Scalar(2))},
        {"Hecke q=z8", hecke(Scalar::root_of_unity(1, 8))},
        {"graded swap dims 1+2", super_swap()},
    };
    std::size_t m_ok = 0;
    std::string m_detail;
    for (const auto& [name, psi] : matrices) {
        const bool yb = check_yang_baxter(psi).all_pass();
        const bool eq = check_symmetrizer_bracket(psi, Side::left).all_pass() &&
                        check_symmetrizer_bracket(psi, Side::right).all_pass();
        m_ok += yb && eq;
        if (!(yb && eq)) m_detail += " " + name;
    }
    report(8, "symmetrizer equals all-plus bracket", clean == runs && m_ok == matrices.size(),
           "diagonal " + std::to_string(clean) + "/" + std::to_string(runs) + " (M, eps, side) sweeps exact; matrix " +
               std::to_string(m_ok) + "/" + std::to_string(matrices.size()) + " braidings exact" +
               (m_detail.empty() ? "" : ", failing:" + m_detail),
           seconds_since(t0));
    info("diagonal, symmetric M: " + std::to_string(sym_clean) + "/" + std::to_string(sym_runs) +
         " sweeps exact; mismatches sit on non-unitary pairs (flagged), unflagged failures " + std::to_string(unexpected));
    // the symmetrizer is the literal braid contraction on every form
    std::size_t contraction_ok = 0, forms_seen = 0;
    for (const auto& M : z2_forms()) {
        Grading g = grading_of(2, M, 1);
        Braiding psi = Braiding::diagonal(g);
        const auto& s = psi.basis_spec();
        bool all = true;
        for (const auto& t : grade_tuples(g.group().elements(), 3)) {
            Word w{psi.basis_letter(t[0], 0), psi.basis_letter(t[1], 0), psi.basis_letter(t[2], 0)};
            Element x = Element::word(s, w);
            Element a = Element::word(s, {w[0]}), b = Element::word(s, {w[1]}), c = Element::word(s, {w[2]});
            for (Side side : {Side::left, Side::right})
                all = all && braided_symmetrizer(psi, t, side).apply(psi, x) ==
                                 bracket_by_contraction({side, Signs::sym}, psi, a, b, c);
        }
        ++forms_seen;
        contraction_ok += all;
    }
    info("symmetrizer equals the braid-contraction bracket on " + std::to_string(contraction_ok) + "/" +
         std::to_string(forms_seen) + " forms");
}

void criterion9() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (long n = 1; n <= 6; ++n) {
        const ClassicalDims d = classical_decomposition_dims(n);
        const long sym = (n + 2) * (n + 1) * n / 6, alt = n * (n - 1) * (n - 2) / 6, mixed = n * (n * n - 1) / 3;
        ok = ok && d.identity_holds && n * n * n == sym + alt + 2 * mixed && d.sym == sym && d.alt == alt &&
             d.mixed == mixed;
    }
    std::string ranks;
    const std::vector<Grade> tg{{0}, {0}, {0}};
    for (int n = 1; n <= 3; ++n) {
        Braiding psi = trivial_swap_braiding(n);
        std::vector<std::pair<Perm3, Scalar>> sym, alt;
        for (Perm3 p : all_perms()) {
            sym.emplace_back(p, Scalar(1));
            const bool even = p == Perm3::e1 || p == Perm3::e123 || p == Perm3::e132;
            alt.emplace_back(p, Scalar(even ? 1 : -1));
        }
        const auto rs = static_cast<long>(operator_rank(operator_matrix(classical_perm_op(sym), psi, tg)));
        const auto ra = static_cast<long>(operator_rank(operator_matrix(classical_perm_op(alt), psi, tg)));
        auto a = operator_matrix(classical_perm_op({{Perm3::e1, Scalar(1)}, {Perm3::e12, Scalar(1)}}), psi, tg);
        auto b = operator_matrix(classical_perm_op({{Perm3::e1, Scalar(1)}, {Perm3::e13, Scalar(-1)}}), psi, tg);
        const auto ry = static_cast<long>(matrix_rank(matmul(a.matrix, b.matrix)));
        const ClassicalDims d = classical_decomposition_dims(n);
        ok = ok && rs == d.sym && ra == d.alt && ry == d.mixed;
        ranks += " n=" + std::to_string(n) + ":(" + std::to_string(rs) + "," + std::to_string(ra) + "," +
                 std::to_string(ry) + ")";
    }
    report(9, "Schur dimensions", ok, "identity for n=1..6; ranks (sym,alt,mixed)" + ranks, seconds_since(t0), 30);
}

void criterion10() {
    const auto t0 = Clock::now();
    auto coeff_of_yx = [](int eps, int n, int sigma) {
        Grading g(GradeGroup{n, 1}, SigmaForm{{{sigma}}}, eps);
        SpecPtr s = symbolic_spec(g.group(), 2);
        Element x = symbol(s, 0, {1}), y = symbol(s, 1, {1});
        Element br = deformed_binary_bracket(g, x, y);
        const Word yx = (y * x).terms().begin()->first;
        const Word xy = (x * y).terms().begin()->first;
        Scalar c(0);
        bool xy_unit = false;
        for (const auto& [w, v] : br.terms()) {
            if (w == yx) c = v;
            if (w == xy) xy_unit = v == Scalar(1);
        }
        return std::make_pair(c, xy_unit && br.size() == 2);
    };
    bool ok = true;
    ok = ok && coeff_of_yx(-1, 2, 0) == std::make_pair(Scalar(-1), true);
    ok = ok && coeff_of_yx(-1, 2, 1) == std::make_pair(Scalar(1), true);
    ok = ok && coeff_of_yx(1, 2, 0) == std::make_pair(Scalar(1), true);
    ok = ok && coeff_of_yx(1, 2, 1) == std::make_pair(Scalar(-1), true);
    std::string z3;
    for (int s = 0; s < 3; ++s) {
        auto [c, shape] = coeff_of_yx(1, 3, s);
        ok = ok && shape && c == Scalar::root_of_unity(s, 3);
        z3 += " " + c.str();
    }
    report(10, "anyonic reduction", ok, "eps=-1: [,] at sigma 0, {,} at 1; eps=+1 swapped; n=3 y.x coefficients" + z3,
           seconds_since(t0));
}

std::string run_cli(const std::string& args, int& code) {
    const std::string cmd = std::string(PARABRAID_CLI) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return out;
    }
    char buf[1 << 14];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int st = ::pclose(p);
    code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

void criterion11() {
    const auto t0 = Clock::now();
    const std::vector<std::string> names{"parafermion", "paraboson",          "mixed",       "three_species",
                                         "anyonic_z3",  "color_superalgebra", "hecke_matrix"};
    std::size_t same = 0, serial_same = 0;
    std::string codes;
    for (const auto& name : names) {
        int c1 = 0, c2 = 0, c3 = 0;
        const std::string a = run_cli("check " + sample(name), c1);
        const std::string b = run_cli("check " + sample(name), c2);
        const std::string s = run_cli("check --threads 1 " + sample(name), c3);
        same += !a.empty() && a == b && c1 == c2;
        serial_same += a == s;
        codes += " " + name + "=" + std::to_string(c1);
    }
    report(11, "determinism", same == names.size(),
           std::to_string(same) + "/" + std::to_string(names.size()) + " sample specs byte-identical across two runs",
           seconds_since(t0));
    info("serial run identical to the parallel run on " + std::to_string(serial_same) + "/" + std::to_string(names.size()) +
         " specs; exit codes" + codes);
}

}  // namespace

// Optional arguments select criteria by number; none runs all of them.
int main(int argc, char** argv) {
    const std::vector<void (*)()> all{criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                      criterion7, criterion8, criterion9, criterion10, criterion11};
    try {
        if (argc == 1) {
            for (auto* c : all) c();
        } else {
            for (int i = 1; i < argc; ++i) {
                const int id = std::atoi(argv[i]);
                if (id < 1 || id > static_cast<int>(all.size())) {
                    std::cout << "unknown criterion " << argv[i] << "\n";
                    return 2;
                }
                all[static_cast<std::size_t>(id - 1)]();
            }
        }
    } catch (const Error& e) {
        std::cout << "aborted: " << e.code() << ": " << e.what() << "\n";
        return 2;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
    return failures ? 1 : 0;
}
