#include "parabraid/scalar.hpp"

#include "parabraid/error.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>

namespace parabraid {

namespace {

constexpr long kMaxOrder = 4096;

using Poly = std::vector<mpq_class>;

long checked_lcm(long a, long b) {
    long g = std::gcd(a, b);
    long result = 0;
    if (__builtin_mul_overflow(a / g, b, &result) || result > kMaxOrder) {
        throw Error("exactscalar.order-too-large",
                    "cyclotomic order lcm(" + std::to_string(a) + "," + std::to_string(b) +
                        ") exceeds " + std::to_string(kMaxOrder));
    }
    return result;
}

int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply the numerator factors
// first so that every division below is exact.
std::vector<long> build_cyclotomic(long n) {
    std::vector<long> p{1};
    std::vector<long> divisors_down;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 1) {
            std::vector<long> next(p.size() + static_cast<std::size_t>(d), 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                next[i + static_cast<std::size_t>(d)] += p[i];
                next[i] -= p[i];
            }
            p = std::move(next);
        } else if (mu == -1) {
            divisors_down.push_back(d);
        }
    }
    for (long d : divisors_down) {
        // divide by x^d - 1: q[i] = p[i+d] + q[i+d]
        auto du = static_cast<std::size_t>(d);
        std::vector<long> q(p.size() - du, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = p[i + du] + (i + du < q.size() ? q[i + du] : 0);
        }
        p = std::move(q);
    }
    return p;
}

void check_order(long order) {
    if (order < 1) {
        throw Error("exactscalar.invalid-order",
                    "root-of-unity order must be positive, got " + std::to_string(order));
    }
    if (order > kMaxOrder) {
        throw Error("exactscalar.order-too-large",
                    "cyclotomic order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxOrder));
    }
}

// In-place remainder modulo Phi_order; result has exactly phi(order) entries.
void reduce_mod_cyclotomic(Poly& p, long order) {
    const auto& phi_poly = cyclotomic_polynomial(order);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t top = p.size(); top-- > deg;) {
        if (sgn(p[top]) == 0) continue;
        const mpq_class t = p[top];
        mpq_class prod;
        for (std::size_t k = 0; k <= deg; ++k) {
            const long f = phi_poly[k];
            if (f == 0) continue;
            mpq_class& slot = p[top - deg + k];
            if (f == 1) {
                slot -= t;
            } else if (f == -1) {
                slot += t;
            } else {
                prod = t;
                prod *= f;
                slot -= prod;
            }
        }
    }
    p.resize(deg);
}

bool all_zero(const Poly& p, std::size_t from = 0) {
    for (std::size_t i = from; i < p.size(); ++i) {
        if (sgn(p[i]) != 0) return false;
    }
    return true;
}

// Representation of zeta_sub^j inside Q(zeta_order) for sub | order.
Poly lift_monomial(long j, long sub, long order) {
    Poly p(static_cast<std::size_t>(order), 0);
    p[static_cast<std::size_t>((j * (order / sub)) % order)] = 1;
    reduce_mod_cyclotomic(p, order);
    return p;
}

// Solve basis * y = x exactly (columns of basis are independent); nullopt if
// x is not in their span.
std::optional<Poly> solve_in_span(const std::vector<Poly>& basis, const Poly& x) {
    const std::size_t rows = x.size();
    const std::size_t cols = basis.size();
    std::vector<Poly> m(rows, Poly(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
        m[r][cols] = x[r];
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col_of_row;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        mpq_class inv = 1 / m[pivot_row][c];
        for (std::size_t k = c; k <= cols; ++k) m[pivot_row][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || sgn(m[r][c]) == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
        }
        pivot_col_of_row.push_back(c);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r) {
        if (sgn(m[r][cols]) != 0) return std::nullopt;
    }
    Poly y(cols, 0);
    for (std::size_t r = 0; r < pivot_row; ++r) y[pivot_col_of_row[r]] = m[r][cols];
    return y;
}

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Polynomial division over Q; divisor must be nonzero with a nonzero lead.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    trim(num);
    if (num.size() < den.size()) return {Poly{}, num};
    Poly q(num.size() - den.size() + 1, 0);
    const mpq_class& lead = den.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        mpq_class t = num[i + den.size() - 1] / lead;
        q[i] = t;
        if (sgn(t) == 0) continue;
        for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= t * den[k];
    }
    num.resize(den.size() - 1);
    trim(num);
    return {q, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    mpq_class prod;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            out[i + j] += prod;
        }
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpq_class parse_rational(std::string_view text) {
    text = strip(text);
    if (text.empty()) throw Error("exactscalar.parse", "empty rational");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/')) {
            throw Error("exactscalar.parse", "malformed rational '" + std::string(text) + "'");
        }
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)) {
        throw Error("exactscalar.parse", "malformed rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

long parse_long(std::string_view text) {
    text = strip(text);
    std::string s(text);
    if (s.empty()) throw Error("exactscalar.parse", "missing integer");
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw Error("exactscalar.parse", "malformed integer '" + s + "'");
    }
    if (used != s.size()) throw Error("exactscalar.parse", "malformed integer '" + s + "'");
    return v;
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
    check_order(n);
    static std::array<std::once_flag, kMaxOrder + 1> flags;
    static std::array<std::vector<long>, kMaxOrder + 1> table;
    auto idx = static_cast<std::size_t>(n);
    std::call_once(flags[idx], [&] { table[idx] = build_cyclotomic(n); });
    return table[idx];
}

Scalar::Scalar() : coeffs_{0} {}

Scalar::Scalar(long value) : coeffs_{mpq_class(value)} {}

Scalar::Scalar(mpq_class value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

Scalar Scalar::root_of_unity(long k, long order) {
    check_order(order);
    k %= order;
    if (k < 0) k += order;
    Scalar s;
    s.order_ = order;
    s.coeffs_ = lift_monomial(k, order, order);
    s.normalize();
    return s;
}

Scalar Scalar::from_coefficients(long order, std::vector<mpq_class> coeffs) {
    check_order(order);
    // fold exponents >= order back using z^order = 1
    Poly p(static_cast<std::size_t>(order), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i].canonicalize();
        p[i % static_cast<std::size_t>(order)] += coeffs[i];
    }
    reduce_mod_cyclotomic(p, order);
    Scalar s;
    s.order_ = order;
    s.coeffs_ = std::move(p);
    s.normalize();
    return s;
}

Scalar Scalar::parse(std::string_view text) {
    text = strip(text);
    if (text.empty()) throw Error("exactscalar.parse", "empty scalar");
    Scalar total;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string_view term = strip(text.substr(start, plus == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : plus - start));
        if (term.empty()) throw Error("exactscalar.parse", "empty term in '" + std::string(text) + "'");
        std::size_t zpos = term.find("z^");
        if (zpos == std::string_view::npos) {
            total += Scalar(parse_rational(term));
        } else {
            mpq_class coeff = 1;
            if (zpos > 0) {
                std::string_view head = term.substr(0, zpos);
                if (head.back() != '*') {
                    throw Error("exactscalar.parse", "expected '*' before z^ in '" + std::string(term) + "'");
                }
                head.remove_suffix(1);
                coeff = strip(head) == "-" ? mpq_class(-1) : parse_rational(head);
            }
            std::string_view tail = term.substr(zpos + 2);
            std::size_t at = tail.find('@');
            if (at == std::string_view::npos) {
                throw Error("exactscalar.parse", "missing '@order' in '" + std::string(term) + "'");
            }
            long k = parse_long(tail.substr(0, at));
            long order = parse_long(tail.substr(at + 1));
            total += Scalar(coeff) * root_of_unity(k, order);
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return total;
}

bool Scalar::is_zero() const { return order_ == 1 && sgn(coeffs_[0]) == 0; }

bool Scalar::is_one() const { return order_ == 1 && coeffs_[0] == 1; }

const mpq_class& Scalar::rational_value() const {
    if (order_ != 1) throw Error("exactscalar.not-rational", "scalar " + str() + " is not rational");
    return coeffs_[0];
}

std::vector<mpq_class> Scalar::lifted_to(long order) const {
    if (order == order_) return coeffs_;
    Poly p(static_cast<std::size_t>(order), 0);
    const long step = order / order_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) p[(static_cast<long>(i) * step) % order] += coeffs_[i];
    }
    reduce_mod_cyclotomic(p, order);
    return p;
}

void Scalar::normalize() {
    if (order_ == 1) return;
    if (order_ % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
        const long m = order_ / 2;
        const long half = (m + 1) / 2;
        Poly p(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (sgn(coeffs_[i]) == 0) continue;
            auto e = static_cast<std::size_t>((static_cast<long>(i) * half) % m);
            if (i % 2 == 0) {
                p[e] += coeffs_[i];
            } else {
                p[e] -= coeffs_[i];
            }
        }
        reduce_mod_cyclotomic(p, m);
        order_ = m;
        coeffs_ = std::move(p);
        if (order_ == 1) return;
    }
    if (all_zero(coeffs_, 1)) {
        coeffs_.resize(1);
        order_ = 1;
        return;
    }
    for (long d = 3; d < order_; ++d) {
        if (order_ % d != 0 || d % 4 == 2) continue;
        std::vector<Poly> basis;
        const long phi_d = euler_phi(d);
        basis.reserve(static_cast<std::size_t>(phi_d));
        for (long j = 0; j < phi_d; ++j) basis.push_back(lift_monomial(j, d, order_));
        if (auto y = solve_in_span(basis, coeffs_)) {
            order_ = d;
            coeffs_ = std::move(*y);
            return;
        }
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Scalar Scalar::conj() const {
    if (order_ == 1) return *this;
    Poly p(static_cast<std::size_t>(order_), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[static_cast<std::size_t>((order_ - static_cast<long>(i)) % order_)] += coeffs_[i];
    }
    return from_coefficients(order_, std::move(p));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("exactscalar.division-by-zero", "inverse of zero scalar");
    if (order_ == 1) return Scalar(mpq_class(1 / coeffs_[0]));
    // extended Euclid: u * x = 1 mod Phi_L
    const auto& phi_int = cyclotomic_polynomial(order_);
    Poly modulus(phi_int.begin(), phi_int.end());
    Poly old_r = coeffs_;
    trim(old_r);
    Poly r = modulus;
    Poly old_s{1};
    Poly s{};
    while (!r.empty()) {
        auto [q, rem] = poly_divmod(old_r, r);
        old_r = std::exchange(r, rem);
        Poly next_s = poly_sub(old_s, poly_mul(q, s));
        old_s = std::exchange(s, next_s);
    }
    // old_r is a nonzero constant because Phi_L is irreducible
    mpq_class c = old_r.at(0);
    for (auto& v : old_s) v /= c;
    return from_coefficients(order_, std::move(old_s));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (order_ == 1 && rhs.order_ == 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    const long order = checked_lcm(order_, rhs.order_);
    Poly a = lifted_to(order);
    Poly b = rhs.lifted_to(order);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    order_ = order;
    coeffs_ = std::move(a);
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (rhs.order_ == 1 && rhs.coeffs_[0] == 1) return *this;
    if (rhs.order_ == 1 && rhs.coeffs_[0] == -1) {
        for (auto& c : coeffs_) mpq_neg(c.get_mpq_t(), c.get_mpq_t());
        return *this;
    }
    if (order_ == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1)) {
        const bool negate = coeffs_[0] == -1;
        *this = rhs;
        if (negate) {
            for (auto& c : coeffs_) mpq_neg(c.get_mpq_t(), c.get_mpq_t());
        }
        return *this;
    }
    if (order_ == 1 && rhs.order_ == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    if (rhs.order_ == 1) {
        for (auto& c : coeffs_) c *= rhs.coeffs_[0];
        if (sgn(rhs.coeffs_[0]) == 0) {
            order_ = 1;
            coeffs_.assign(1, 0);
        }
        return *this;
    }
    if (order_ == 1) {
        mpq_class f = coeffs_[0];
        *this = rhs;
        *this *= Scalar(f);
        return *this;
    }
    if (order_ == rhs.order_) {
        // single-term factor c * zeta^k: shift, scale and fold the overflow
        std::size_t nonzero = 0, k = 0;
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            if (sgn(rhs.coeffs_[i]) != 0) {
                ++nonzero;
                k = i;
            }
        }
        if (nonzero == 1) {
            const mpq_class& c = rhs.coeffs_[k];
            const bool unit = c == 1, neg_unit = c == -1;
            Poly prod(coeffs_.size() + k);
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                if (unit) {
                    prod[i + k] = coeffs_[i];
                } else if (neg_unit) {
                    mpq_neg(prod[i + k].get_mpq_t(), coeffs_[i].get_mpq_t());
                } else {
                    mpq_mul(prod[i + k].get_mpq_t(), coeffs_[i].get_mpq_t(), c.get_mpq_t());
                }
            }
            reduce_mod_cyclotomic(prod, order_);
            coeffs_ = std::move(prod);
            normalize();
            return *this;
        }
    }
    const long order = checked_lcm(order_, rhs.order_);
    Poly prod = order == order_ && order == rhs.order_ ? poly_mul(coeffs_, rhs.coeffs_)
                                                       : poly_mul(lifted_to(order), rhs.lifted_to(order));
    if (prod.empty()) prod.assign(1, 0);
    reduce_mod_cyclotomic(prod, order);
    order_ = order;
    coeffs_ = std::move(prod);
    normalize();
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string Scalar::str() const {
    if (order_ == 1) return coeffs_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        if (!out.empty()) out += '+';
        out += coeffs_[i].get_str();
        if (i > 0) out += "*z^" + std::to_string(i) + "@" + std::to_string(order_);
    }
    return out.empty() ? "0" : out;
}

std::complex<double> Scalar::to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
        acc += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace parabraid
