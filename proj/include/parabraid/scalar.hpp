#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace parabraid {

/**
 * Exact element of a cyclotomic field Q(zeta_L).
 *
 * The value is the polynomial c_0 + c_1 z + ... + c_{phi(L)-1} z^{phi(L)-1}
 * in z = exp(2 pi i / L), reduced modulo the L-th cyclotomic polynomial.
 * After every operation L is lowered to the conductor of the value (the
 * smallest order whose field contains it; never 2 mod 4), so equality is
 * plain comparison of order and coefficients.
 *
 * Text form: terms "p/q*z^k@L" joined by "+"; the k = 0 term is written as
 * a bare rational and a rational value is just "p/q".
 */
class Scalar {
public:
    Scalar();
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class value);

    /// zeta_order^k. Throws exactscalar.invalid-order when order < 1.
    static Scalar root_of_unity(long k, long order);
    /// Coefficients in the power basis of Q(zeta_order); any length, reduced on entry.
    static Scalar from_coefficients(long order, std::vector<mpq_class> coeffs);
    static Scalar parse(std::string_view text);

    long order() const { return order_; }
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return order_ == 1; }
    const mpq_class& rational_value() const;

    Scalar operator-() const;
    Scalar conj() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs * rhs.inverse(); }
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    std::string str() const;
    /// Floating-point rendering for human-facing reports only.
    std::complex<double> to_complex() const;

private:
    long order_ = 1;
    std::vector<mpq_class> coeffs_;

    void normalize();
    std::vector<mpq_class> lifted_to(long order) const;
};

/// zeta_order^k, the canonical phase exp(2 pi i k / order).
inline Scalar make_phase(long k, long order) { return Scalar::root_of_unity(k, order); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

long euler_phi(long n);
/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace parabraid
