#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parabraid/error.hpp"
#include "parabraid/freealg.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace parabraid;

namespace {

SpecPtr make_spec() {
    GradeGroup g{2, 2};
    return std::make_shared<const AlgebraSpec>(
        g, std::vector<Generator>{{"b", {0, 1}, std::nullopt, 0}, {"a", {1, 0}, std::nullopt, 0}, {"c", {1, 1}, std::nullopt, 0}});
}

Element random_element(const SpecPtr& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 3), letter(0, 2), coeff(-3, 3), k(0, 3);
    Element x(s);
    for (int t = 0; t < 4; ++t) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back(static_cast<Letter>(letter(rng)));
        x.add_term(w, Scalar(coeff(rng)) * Scalar::root_of_unity(k(rng), 4));
    }
    return x;
}

}  // namespace

TEST_CASE("generators are indexed in id order") {
    auto s = make_spec();
    CHECK(s->letter("a") == 0);
    CHECK(s->letter("b") == 1);
    CHECK(s->letter("c") == 2);
    CHECK_FALSE(s->find("d").has_value());
    try {
        (void)s->letter("d");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "freealg.unknown-generator");
    }
}

TEST_CASE("ring operations agree with the polynomial oracle") {
    auto s = make_spec();
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        Element x = random_element(s, rng), y = random_element(s, rng), z = random_element(s, rng);
        CHECK(oracle::same(oracle::to_poly(x + y), oracle::to_poly(x) + oracle::to_poly(y)));
        CHECK(oracle::same(oracle::to_poly(x - y), oracle::to_poly(x) - oracle::to_poly(y)));
        CHECK(oracle::same(oracle::to_poly(x * y), oracle::to_poly(x) * oracle::to_poly(y)));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("rendering") {
    auto s = make_spec();
    Element a = Element::generator(s, "a"), b = Element::generator(s, "b");
    CHECK(Element(s).str() == "0");
    CHECK(Element::unit(s).str() == "1");
    CHECK(a.str() == "a");
    CHECK((-a).str() == "-a");
    CHECK((Scalar(2) * (a * b)).str() == "2*a.b");
    Element w = (Scalar(1) + Scalar::root_of_unity(1, 3)) * a;
    CHECK(w.str().front() == '(');
    CHECK((a + b).str() == "a + b");
}

TEST_CASE("grades and degrees") {
    auto s = make_spec();
    Element a = Element::generator(s, "a"), b = Element::generator(s, "b"), c = Element::generator(s, "c");
    CHECK((a * b).grade_of() == Grade{1, 1});
    CHECK((a * b + c).grade_of() == Grade{1, 1});
    CHECK_FALSE((a + b).grade_of().has_value());
    CHECK((a * b * c).degree() == std::size_t{3});
    CHECK_FALSE((a + b * c).degree().has_value());
    CHECK(Element(s).grade_of() == Grade{0, 0});
    CHECK_THROWS_AS((a + b).homogeneous_grade("ternary.grade"), Error);
}

TEST_CASE("elements of different specs do not mix") {
    auto s1 = make_spec(), s2 = make_spec();
    Element a1 = Element::generator(s1, "a"), a2 = Element::generator(s2, "a");
    try {
        (void)(a1 + a2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "freealg.spec-mismatch");
    }
}

TEST_CASE("zero coefficients are dropped") {
    auto s = make_spec();
    Element x(s);
    x.add_term({0, 1}, Scalar(2));
    x.add_term({0, 1}, Scalar(-2));
    CHECK(x.is_zero());
    CHECK(x.size() == 0);
}
