#ifndef REFLINV_CYCLOTOMIC_HPP
#define REFLINV_CYCLOTOMIC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reflinv {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {
struct CyclotomicField;
}

// Upper bound on the order reached by mixed-order promotion.
unsigned cyclotomic_order_cap() noexcept;
void set_cyclotomic_order_cap(unsigned cap) noexcept;

unsigned euler_phi(unsigned m);
// Coefficients (constant term first) of the m-th cyclotomic polynomial.
const std::vector<Integer> &cyclotomic_polynomial(unsigned m);

// An exact element of Q(zeta_m), stored as sum_j (num_j / den) zeta_m^j with
// 0 <= j < phi(m), reduced modulo the m-th cyclotomic polynomial and with
// gcd(num..., den) = 1.
//
// Operands of different orders are promoted to the lcm of the orders. Results
// keep the promoted order; use minimized() to recover the smallest order
// whose field contains the value.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value); // NOLINT: implicit from integers is intended
    Cyclotomic(const Integer &value);
    Cyclotomic(const Rational &value);

    // zeta_m^k for any integer k.
    static Cyclotomic zeta(unsigned m, long k = 1);
    // cos(2 pi k / n) and sin(2 pi k / n), both living in Q(zeta_lcm(n,4)).
    static Cyclotomic cos_2pi(unsigned n, long k);
    static Cyclotomic sin_2pi(unsigned n, long k);

    unsigned order() const noexcept;
    unsigned degree() const noexcept; // phi(order)
    // Coefficient of zeta^j in the canonical basis, 0 <= j < degree().
    Rational coefficient(unsigned j) const;

    bool is_zero() const noexcept;
    bool is_one() const;
    bool is_rational() const noexcept;
    bool is_real() const;
    bool is_imaginary() const; // conj(a) == -a
    // Valid only when is_rational().
    Rational to_rational() const;

    Cyclotomic conj() const;
    Cyclotomic galois(long j) const; // zeta -> zeta^j, gcd(j, order) = 1
    Cyclotomic inverse() const;
    Cyclotomic promoted(unsigned order) const;
    Cyclotomic minimized() const;
    Cyclotomic pow(long e) const;

    Cyclotomic &operator+=(const Cyclotomic &o);
    Cyclotomic &operator-=(const Cyclotomic &o);
    Cyclotomic &operator*=(const Cyclotomic &o);
    Cyclotomic &operator/=(const Cyclotomic &o);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

    // Total order on the stored representation. Only meaningful between
    // values brought to a common form (both minimized, or both promoted to
    // the same order).
    friend bool structural_less(const Cyclotomic &a, const Cyclotomic &b);

    // Exact serialization of the representation at the given order (which
    // must be a multiple of order()). Equal values give equal keys.
    std::string key_at(unsigned order) const;

    // Canonical text in the E(m)^k syntax, printed from minimized().
    std::string to_string() const;

    // Scalar text parser (E(m)^k, i, rationals, + - * / ^ and parentheses).
    static Cyclotomic parse(const std::string &text);

private:
    Cyclotomic(const detail::CyclotomicField *field, std::vector<Integer> num, Integer den);
    void normalize();
    Cyclotomic rational_scaled(const Rational &r) const;

    const detail::CyclotomicField *field_;
    std::vector<Integer> num_;
    Integer den_;
};

std::ostream &operator<<(std::ostream &os, const Cyclotomic &a);

struct StructuralLess {
    bool operator()(const Cyclotomic &a, const Cyclotomic &b) const { return structural_less(a, b); }
};

// Lexicographic structural order on vectors (used for exponent keys).
struct VectorStructuralLess {
    bool operator()(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) const;
};

std::string rational_to_string(const Rational &r);

} // namespace reflinv

#endif
