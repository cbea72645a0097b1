#ifndef REFLINV_POLYNOMIAL_HPP
#define REFLINV_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflinv/cyclotomic.hpp"
#include "reflinv/linalg.hpp"
#include "reflinv/matrix_group.hpp"

namespace reflinv {

constexpr std::size_t kMaxVariables = 8;
constexpr unsigned kMaxExponent = 255;

// Exponent vector of x1..xn packed one byte per variable, x1 in the high byte,
// so that comparing (degree, bits) is graded lexicographic order with
// x1 > x2 > ... > xn.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::vector<unsigned> &exponents);
    static Monomial variable(std::size_t i);

    unsigned exponent(std::size_t i) const noexcept
    {
        return static_cast<unsigned>((bits_ >> (8 * (kMaxVariables - 1 - i))) & 0xFFu);
    }
    unsigned degree() const noexcept { return degree_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::vector<unsigned> exponents(std::size_t n) const;

    Monomial operator*(const Monomial &o) const;
    // True when every exponent of `o` is at most the matching one here.
    bool divisible_by(const Monomial &o) const noexcept;
    Monomial operator/(const Monomial &o) const;

    friend bool operator==(const Monomial &a, const Monomial &b) noexcept { return a.bits_ == b.bits_; }
    friend bool operator<(const Monomial &a, const Monomial &b) noexcept
    {
        return a.degree_ != b.degree_ ? a.degree_ < b.degree_ : a.bits_ < b.bits_;
    }

    std::string to_string(std::size_t n) const;

private:
    std::uint64_t bits_ = 0;
    std::uint16_t degree_ = 0;
};

// Exact polynomial in x1..xn over cyclotomic coefficients.
class Poly {
public:
    using Terms = std::map<Monomial, Cyclotomic>;

    explicit Poly(std::size_t n = 0);
    static Poly constant(std::size_t n, const Cyclotomic &c);
    static Poly variable(std::size_t n, std::size_t i);
    static Poly term(std::size_t n, const Monomial &m, const Cyclotomic &c);

    std::size_t dimension() const noexcept { return n_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    Poly homogeneous_component(unsigned k) const;
    Cyclotomic coefficient(const Monomial &m) const;
    Cyclotomic constant_term() const { return coefficient(Monomial()); }
    // Leading (graded-lex largest) coefficient; zero for the zero polynomial.
    Cyclotomic leading_coefficient() const;

    void add_term(const Monomial &m, const Cyclotomic &c);

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Cyclotomic &c);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Cyclotomic &c) { return a *= c; }
    friend Poly operator*(const Cyclotomic &c, Poly a) { return a *= c; }
    friend bool operator==(const Poly &a, const Poly &b);
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t i) const;
    Cyclotomic evaluate(const Vector &point) const;

    // "(1/2)*x1^2 + (1/2)*x2^2"; terms in descending graded-lex order.
    std::string to_string() const;
    static Poly parse(const std::string &text, std::size_t n);

private:
    std::size_t n_;
    Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

// Monomials of exact degree k in n variables, descending graded-lex order.
class GradedBasis {
public:
    GradedBasis(std::size_t n, unsigned k);

    std::size_t dimension() const noexcept { return n_; }
    unsigned degree() const noexcept { return k_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial> &monomials() const noexcept { return monomials_; }
    const Monomial &operator[](std::size_t i) const { return monomials_[i]; }
    std::size_t index_of(const Monomial &m) const;

    // Coordinates of a homogeneous degree-k polynomial.
    Vector coordinates(const Poly &p) const;
    Poly polynomial(const Vector &coords) const;

private:
    std::size_t n_;
    unsigned k_;
    std::vector<Monomial> monomials_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

Integer binomial(unsigned n, unsigned k);

// Psi(k): substitute x -> k^T x.
Poly act(const RMatrix &k, const Poly &p);

// Per-group cache of the substituted variables and their powers, for repeated
// group averaging.
class GroupActionCache {
public:
    explicit GroupActionCache(const ReflectionGroup &g);
    const ReflectionGroup &group() const noexcept { return *group_; }
    Poly act(std::size_t element, const Poly &p);
    Poly act_monomial(std::size_t element, const Monomial &m);

private:
    const Poly &power(std::size_t element, std::size_t var, unsigned e);

    const ReflectionGroup *group_;
    std::vector<std::vector<std::vector<Poly>>> powers_; // [element][var][e]
};

// (1/|K|) sum_k act(k, p)
Poly reynolds(const ReflectionGroup &g, const Poly &p);
Poly reynolds(GroupActionCache &cache, const Poly &p);

// P(d/dx1, ..., d/dxn) applied to f.
Poly diff_apply(const Poly &symbol, const Poly &target);

// Basis of homogeneous invariants of degree k: reduced row echelon basis of the
// Reynolds images of the degree-k monomials.
std::vector<Poly> invariant_subspace(const ReflectionGroup &g, unsigned k);
std::vector<Poly> invariant_subspace(GroupActionCache &cache, unsigned k);

// Determinant of the Jacobian (d p_i / d x_l) as a polynomial.
Poly jacobian_determinant(const std::vector<Poly> &polys);
bool jacobian_independent(const std::vector<Poly> &polys);

} // namespace reflinv

#endif
