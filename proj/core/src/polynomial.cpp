#include "reflinv/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "expr_parser.hpp"
#include "reflinv/error.hpp"

namespace reflinv {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const std::vector<unsigned> &exponents)
{
    if (exponents.size() > kMaxVariables) {
        throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    unsigned deg = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > kMaxExponent) {
            throw InvalidArgument("exponent exceeds " + std::to_string(kMaxExponent));
        }
        bits_ |= static_cast<std::uint64_t>(exponents[i]) << (8 * (kMaxVariables - 1 - i));
        deg += exponents[i];
    }
    if (deg > kMaxExponent) {
        throw InvalidArgument("total degree exceeds " + std::to_string(kMaxExponent));
    }
    degree_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::variable(std::size_t i)
{
    std::vector<unsigned> e(i + 1, 0);
    e[i] = 1;
    return Monomial(e);
}

std::vector<unsigned> Monomial::exponents(std::size_t n) const
{
    std::vector<unsigned> e(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = exponent(i);
    }
    return e;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    if (degree_ + o.degree_ > static_cast<int>(kMaxExponent)) {
        throw InvalidArgument("total degree exceeds " + std::to_string(kMaxExponent));
    }
    Monomial r;
    r.bits_ = bits_ + o.bits_; // no byte can overflow since total degree <= 255
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
}

bool Monomial::divisible_by(const Monomial &o) const noexcept
{
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (o.exponent(i) > exponent(i)) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator/(const Monomial &o) const
{
    Monomial r;
    r.bits_ = bits_ - o.bits_;
    r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
    return r;
}

std::string Monomial::to_string(std::size_t n) const
{
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned e = exponent(i);
        if (e == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += "x" + std::to_string(i + 1);
        if (e > 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::size_t n) : n_(n)
{
    if (n > kMaxVariables) {
        throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
}

Poly Poly::constant(std::size_t n, const Cyclotomic &c)
{
    Poly p(n);
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::variable(std::size_t n, std::size_t i)
{
    if (i >= n) {
        throw InvalidArgument("variable index out of range");
    }
    return term(n, Monomial::variable(i), Cyclotomic(1));
}

Poly Poly::term(std::size_t n, const Monomial &m, const Cyclotomic &c)
{
    Poly p(n);
    p.add_term(m, c);
    return p;
}

int Poly::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

bool Poly::is_homogeneous() const noexcept
{
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly Poly::homogeneous_component(unsigned k) const
{
    Poly r(n_);
    for (const auto &[m, c] : terms_) {
        if (m.degree() == k) {
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
    }
    return r;
}

Cyclotomic Poly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

Cyclotomic Poly::leading_coefficient() const
{
    return terms_.empty() ? Cyclotomic(0) : terms_.rbegin()->second;
}

void Poly::add_term(const Monomial &m, const Cyclotomic &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Poly &Poly::operator+=(const Poly &o)
{
    if (o.n_ != n_) {
        throw InvalidArgument("polynomial dimension mismatch");
    }
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    if (o.n_ != n_) {
        throw InvalidArgument("polynomial dimension mismatch");
    }
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Poly &Poly::operator*=(const Cyclotomic &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto &[m, v] : r.terms_) {
        v = -v;
    }
    return r;
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.n_ != b.n_) {
        throw InvalidArgument("polynomial dimension mismatch");
    }
    Poly r(a.n_);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

bool operator==(const Poly &a, const Poly &b)
{
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto ib = b.terms_.begin();
    for (const auto &[m, c] : a.terms_) {
        if (!(m == ib->first) || c != ib->second) {
            return false;
        }
        ++ib;
    }
    return true;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(n_, Cyclotomic(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Poly Poly::derivative(std::size_t i) const
{
    if (i >= n_) {
        throw InvalidArgument("variable index out of range");
    }
    Poly r(n_);
    const Monomial xi = Monomial::variable(i);
    for (const auto &[m, c] : terms_) {
        const unsigned e = m.exponent(i);
        if (e > 0) {
            r.add_term(m / xi, c * Cyclotomic(static_cast<long>(e)));
        }
    }
    return r;
}

Cyclotomic Poly::evaluate(const Vector &point) const
{
    if (point.size() != n_) {
        throw InvalidArgument("evaluation point has wrong dimension");
    }
    // cache powers per variable
    std::vector<std::vector<Cyclotomic>> powers(n_);
    Cyclotomic total;
    for (const auto &[m, c] : terms_) {
        Cyclotomic v = c;
        for (std::size_t i = 0; i < n_; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            auto &pw = powers[i];
            if (pw.empty()) {
                pw.push_back(Cyclotomic(1));
            }
            while (pw.size() <= e) {
                pw.push_back(pw.back() * point[i]);
            }
            v *= pw[e];
        }
        total += v;
    }
    return total;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string ms = it->first.to_string(n_);
        const Cyclotomic &c = it->second;
        bool negative = false;
        std::string coef;
        if (c.is_rational()) {
            Rational r = c.to_rational();
            negative = r < 0;
            if (negative) {
                r = -r;
            }
            if (ms.empty()) {
                coef = rational_to_string(r);
            } else if (r == 1) {
                coef = "";
            } else if (r.get_den() == 1) {
                coef = r.get_num().get_str() + "*";
            } else {
                coef = "(" + rational_to_string(r) + ")*";
            }
        } else {
            coef = "(" + c.to_string() + ")" + (ms.empty() ? "" : "*");
        }
        const std::string term = coef + ms;
        if (first) {
            out += negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

namespace {

struct PolyTraits {
    using Value = Poly;
    std::size_t n;

    Value constant(const Cyclotomic &c) const { return Poly::constant(n, c); }

    std::optional<Value> variable(const std::string &ident) const
    {
        if (ident.size() < 2 || ident[0] != 'x') {
            return std::nullopt;
        }
        if (!std::all_of(ident.begin() + 1, ident.end(), ::isdigit) || ident.size() > 4) {
            return std::nullopt;
        }
        const std::size_t idx = std::stoul(ident.substr(1));
        if (idx < 1 || idx > n) {
            return std::nullopt;
        }
        return Poly::variable(n, idx - 1);
    }

    Value divide(const Value &a, const Value &b) const
    {
        if (b.degree() > 0) {
            throw InvalidArgument("division by a non-constant polynomial");
        }
        const Cyclotomic c = b.constant_term();
        if (c.is_zero()) {
            throw DivisionByZero();
        }
        return a * c.inverse();
    }

    Value power(const Value &a, long e) const
    {
        if (e < 0) {
            if (a.degree() > 0) {
                throw InvalidArgument("negative power of a non-constant polynomial");
            }
            return Poly::constant(n, a.constant_term().pow(e));
        }
        return a.pow(static_cast<unsigned>(e));
    }
};

} // namespace

Poly Poly::parse(const std::string &text, std::size_t n)
{
    PolyTraits traits{n};
    return detail::ExprParser<PolyTraits>(text, traits).parse();
}

std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// GradedBasis

namespace {

void enumerate(std::size_t n, unsigned k, std::size_t i, std::vector<unsigned> &cur, std::vector<Monomial> &out)
{
    if (i + 1 == n) {
        cur[i] = k;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = k + 1; e-- > 0;) {
        cur[i] = e;
        enumerate(n, k - e, i + 1, cur, out);
    }
}

} // namespace

GradedBasis::GradedBasis(std::size_t n, unsigned k) : n_(n), k_(k)
{
    if (n == 0) {
        monomials_.push_back(Monomial());
    } else {
        std::vector<unsigned> cur(n, 0);
        enumerate(n, k, 0, cur, monomials_);
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i].bits(), i);
    }
}

std::size_t GradedBasis::index_of(const Monomial &m) const
{
    auto it = index_.find(m.bits());
    if (it == index_.end() || m.degree() != k_) {
        throw InvalidArgument("monomial " + m.to_string(n_) + " is not in the degree-" + std::to_string(k_) +
                              " basis");
    }
    return it->second;
}

Vector GradedBasis::coordinates(const Poly &p) const
{
    Vector v(monomials_.size());
    for (const auto &[m, c] : p.terms()) {
        v[index_of(m)] = c;
    }
    return v;
}

Poly GradedBasis::polynomial(const Vector &coords) const
{
    Poly p(n_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        p.add_term(monomials_[i], coords[i]);
    }
    return p;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// ---------------------------------------------------------------------------
// Group action

namespace {

Poly variable_image(const RMatrix &k, std::size_t i)
{
    // x_i -> (k^T x)_i = sum_j k(j, i) x_j
    const std::size_t n = k.rows();
    Poly p(n);
    for (std::size_t j = 0; j < n; ++j) {
        p.add_term(Monomial::variable(j), k(j, i));
    }
    return p;
}

} // namespace

Poly act(const RMatrix &k, const Poly &p)
{
    const std::size_t n = p.dimension();
    if (k.rows() != n || k.cols() != n) {
        throw InvalidArgument("matrix and polynomial dimensions differ");
    }
    std::vector<std::vector<Poly>> powers(n);
    Poly out(n);
    for (const auto &[m, c] : p.terms()) {
        Poly t = Poly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) {
                continue;
            }
            auto &pw = powers[i];
            if (pw.empty()) {
                pw.push_back(Poly::constant(n, Cyclotomic(1)));
                pw.push_back(variable_image(k, i));
            }
            while (pw.size() <= e) {
                pw.push_back(pw.back() * pw[1]);
            }
            t = t * pw[e];
        }
        out += t;
    }
    return out;
}

GroupActionCache::GroupActionCache(const ReflectionGroup &g)
    : group_(&g), powers_(g.order(), std::vector<std::vector<Poly>>(g.dimension()))
{
}

const Poly &GroupActionCache::power(std::size_t element, std::size_t var, unsigned e)
{
    auto &pw = powers_[element][var];
    const std::size_t n = group_->dimension();
    if (pw.empty()) {
        pw.push_back(Poly::constant(n, Cyclotomic(1)));
        pw.push_back(variable_image(group_->element(element), var));
    }
    while (pw.size() <= e) {
        pw.push_back(pw.back() * pw[1]);
    }
    return pw[e];
}

Poly GroupActionCache::act_monomial(std::size_t element, const Monomial &m)
{
    const std::size_t n = group_->dimension();
    Poly t = Poly::constant(n, Cyclotomic(1));
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned e = m.exponent(i);
        if (e > 0) {
            t = t * power(element, i, e);
        }
    }
    return t;
}

Poly GroupActionCache::act(std::size_t element, const Poly &p)
{
    Poly out(group_->dimension());
    for (const auto &[m, c] : p.terms()) {
        out += act_monomial(element, m) * c;
    }
    return out;
}

Poly reynolds(GroupActionCache &cache, const Poly &p)
{
    const auto &g = cache.group();
    if (p.dimension() != g.dimension()) {
        throw InvalidArgument("polynomial and group dimensions differ");
    }
    Poly sum(g.dimension());
    for (std::size_t k = 0; k < g.order(); ++k) {
        sum += cache.act(k, p);
    }
    return sum * Cyclotomic(Rational(1, static_cast<unsigned long>(g.order())));
}

Poly reynolds(const ReflectionGroup &g, const Poly &p)
{
    GroupActionCache cache(g);
    return reynolds(cache, p);
}

// ---------------------------------------------------------------------------
// Differential operators

Poly diff_apply(const Poly &symbol, const Poly &target)
{
    if (symbol.dimension() != target.dimension()) {
        throw InvalidArgument("polynomial dimension mismatch");
    }
    const std::size_t n = target.dimension();
    Poly out(n);
    for (const auto &[a, ca] : symbol.terms()) {
        for (const auto &[b, cb] : target.terms()) {
            if (!b.divisible_by(a)) {
                continue;
            }
            // prod_i b_i! / (b_i - a_i)!
            Integer factor(1);
            for (std::size_t i = 0; i < n; ++i) {
                for (unsigned e = b.exponent(i); e > b.exponent(i) - a.exponent(i); --e) {
                    factor *= e;
                }
            }
            out.add_term(b / a, ca * cb * Cyclotomic(factor));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariants

std::vector<Poly> invariant_subspace(GroupActionCache &cache, unsigned k)
{
    const auto &g = cache.group();
    const GradedBasis basis(g.dimension(), k);
    SpanBasis span(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Poly r = reynolds(cache, Poly::term(g.dimension(), basis[i], Cyclotomic(1)));
        span.add(basis.coordinates(r));
    }
    std::vector<Poly> out;
    for (const auto &row : span.echelon_rows()) {
        out.push_back(basis.polynomial(row));
    }
    return out;
}

std::vector<Poly> invariant_subspace(const ReflectionGroup &g, unsigned k)
{
    GroupActionCache cache(g);
    return invariant_subspace(cache, k);
}

Poly jacobian_determinant(const std::vector<Poly> &polys)
{
    const std::size_t n = polys.size();
    if (n == 0) {
        throw InvalidArgument("empty polynomial list");
    }
    for (const auto &p : polys) {
        if (p.dimension() != n) {
            throw InvalidArgument("jacobian criterion needs n polynomials in n variables");
        }
    }
    std::vector<std::vector<Poly>> jac(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            jac[i].push_back(polys[i].derivative(l));
        }
    }
    // Laplace expansion along rows with memoization over column subsets.
    std::vector<Poly> minors(std::size_t(1) << n, Poly(n));
    minors[0] = Poly::constant(n, Cyclotomic(1));
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const unsigned r = static_cast<unsigned>(__builtin_popcount(s));
        Poly det(n);
        unsigned idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (1u << j))) {
                continue;
            }
            const Poly &entry = jac[r - 1][j];
            if (!entry.is_zero()) {
                Poly t = entry * minors[s & ~(1u << j)];
                if ((r - 1 + idx) % 2 == 1) {
                    t = -t;
                }
                det += t;
            }
            ++idx;
        }
        minors[s] = std::move(det);
    }
    return minors[(1u << n) - 1];
}

bool jacobian_independent(const std::vector<Poly> &polys) { return !jacobian_determinant(polys).is_zero(); }

} // namespace reflinv
