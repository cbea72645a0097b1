#ifndef REFLINV_NUMERIC_HPP
#define REFLINV_NUMERIC_HPP

#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "reflinv/cyclotomic.hpp"

namespace reflinv {

using Real = boost::multiprecision::mpfr_float;

// Sets the default MPFR working precision (in bits) for values created while
// the scope is alive; restores the previous precision on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
    unsigned saved_digits10_;
};

unsigned bits_to_digits10(unsigned bits);

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(long r) : re(r), im(0) {}

    Complex conj() const { return {re, -im}; }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm2()); }

    Complex &operator+=(const Complex &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex &operator-=(const Complex &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Complex operator+(Complex a, const Complex &b) { return a += b; }
    friend Complex operator-(Complex a, const Complex &b) { return a -= b; }
    friend Complex operator*(const Complex &a, const Complex &b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex &a, const Real &s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex &a, const Complex &b)
    {
        const Real d = b.norm2();
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }
};

using ComplexMatrix = std::vector<std::vector<Complex>>;

// Complex value of a cyclotomic number at the current working precision.
Complex embed_complex(const Cyclotomic &a);
// Same, under a PrecisionScope of `bits` (>= 53) plus guard bits.
Complex embed_complex(const Cyclotomic &a, unsigned bits);

// exp(z) for an exact z, evaluated at the current working precision.
Complex exp_complex(const Cyclotomic &z);

// Singular values (descending) by one-sided Jacobi at the current precision.
std::vector<Real> singular_values(ComplexMatrix a);

// Number of singular values above 2^(-bits/2) * max(1, sigma_max).
std::size_t numeric_rank(const std::vector<Real> &singular, unsigned bits);
Real rank_threshold(const std::vector<Real> &singular, unsigned bits);

} // namespace reflinv

#endif
