#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parabraid/error.hpp"
#include "parabraid/scalar.hpp"
#include "support/oracles.hpp"

#include <random>

using parabraid::Error;
using parabraid::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& rng, long order) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<mpq_class> cs;
    for (long k = 0; k < order; ++k) cs.emplace_back(coeff(rng), den(rng));
    return Scalar::from_coefficients(order, cs);
}

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("roots of unity evaluate to the unit circle points") {
    for (long n : {1, 2, 3, 4, 5, 6, 8, 12, 15}) {
        for (long k = -n; k <= 2 * n; ++k) {
            CHECK(oracle::close(oracle::eval(Scalar::root_of_unity(k, n)), oracle::root(k, n)));
        }
    }
}

TEST_CASE("sum of the nontrivial cube roots is -1") {
    Scalar z = Scalar::root_of_unity(1, 3);
    CHECK(z + z * z == Scalar(-1));
    CHECK((z + z * z).is_rational());
}

TEST_CASE("values are stored at their conductor") {
    CHECK(Scalar::root_of_unity(2, 4) == Scalar(-1));
    CHECK(Scalar::root_of_unity(2, 4).order() == 1);
    // zeta_6 = -zeta_3^2 lives in Q(zeta_3)
    CHECK(Scalar::root_of_unity(1, 6) == -Scalar::root_of_unity(2, 3));
    CHECK(Scalar::root_of_unity(1, 6).order() == 3);
    // i lives in Q(zeta_4), not lowered
    CHECK(Scalar::root_of_unity(3, 12) == Scalar::root_of_unity(1, 4));
    CHECK(Scalar::root_of_unity(3, 12).order() == 4);
}

TEST_CASE("field operations agree with complex evaluation") {
    std::mt19937_64 rng(7);
    for (long n : {1, 3, 4, 5, 7, 8, 9, 12}) {
        for (int rep = 0; rep < 20; ++rep) {
            Scalar a = random_scalar(rng, n), b = random_scalar(rng, n);
            CHECK(oracle::close(oracle::eval(a + b), oracle::eval(a) + oracle::eval(b)));
            CHECK(oracle::close(oracle::eval(a - b), oracle::eval(a) - oracle::eval(b)));
            CHECK(oracle::close(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b), 1e-7));
            CHECK(oracle::close(oracle::eval(a.conj()), std::conj(oracle::eval(a))));
            if (!b.is_zero()) {
                CHECK(oracle::close(oracle::eval(a / b), oracle::eval(a) / oracle::eval(b), 1e-6));
                CHECK(b * b.inverse() == Scalar(1));
            }
        }
    }
}

TEST_CASE("mixed orders lift to a common field") {
    Scalar i = Scalar::root_of_unity(1, 4);
    Scalar w = Scalar::root_of_unity(1, 3);
    Scalar p = i * w;
    CHECK(oracle::close(oracle::eval(p), oracle::root(1, 4) * oracle::root(1, 3)));
    CHECK(p == Scalar::root_of_unity(7, 12));
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(11);
    for (long n : {1, 3, 4, 5, 8}) {
        for (int rep = 0; rep < 10; ++rep) {
            Scalar a = random_scalar(rng, n);
            CHECK(Scalar::parse(a.str()) == a);
        }
    }
    CHECK(Scalar::parse("-1/2") == Scalar(mpq_class(-1, 2)));
    CHECK(Scalar::parse("z^1@3") == Scalar::root_of_unity(1, 3));
    CHECK(Scalar::parse("1+2*z^1@3") == Scalar(1) + Scalar(2) * Scalar::root_of_unity(1, 3));
    CHECK(Scalar(0).str() == "0");
}

TEST_CASE("cyclotomic polynomials vanish on primitive roots only") {
    for (long n = 1; n <= 24; ++n) {
        const auto& poly = parabraid::cyclotomic_polynomial(n);
        CHECK(static_cast<long>(poly.size()) - 1 == parabraid::euler_phi(n));
        for (long k = 0; k < n; ++k) {
            oracle::cplx v = 0;
            for (std::size_t d = 0; d < poly.size(); ++d) v += static_cast<double>(poly[d]) * oracle::root(k * static_cast<long>(d), n);
            const bool primitive = std::gcd(k, n) == 1;
            CHECK((std::abs(v) < 1e-8) == primitive);
        }
    }
    CHECK(parabraid::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("error codes") {
    CHECK(code_of([] { (void)Scalar::root_of_unity(1, 0); }) == "exactscalar.invalid-order");
    CHECK(code_of([] { (void)Scalar::root_of_unity(1, 5000); }) == "exactscalar.order-too-large");
    CHECK(code_of([] { (void)Scalar(0).inverse(); }) == "exactscalar.division-by-zero");
    CHECK(code_of([] { (void)Scalar::parse("1+*"); }) == "exactscalar.parse");
    CHECK(code_of([] { (void)Scalar::root_of_unity(1, 3).rational_value(); }) == "exactscalar.not-rational");
}
