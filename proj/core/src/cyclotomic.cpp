#include "reflinv/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "reflinv/error.hpp"

namespace reflinv {

namespace detail {

struct SubfieldProjector {
    unsigned sub_order = 1;
    std::vector<unsigned> rows;            // pivot coordinates in the big field
    std::vector<std::vector<Rational>> inv; // phi(d) x phi(d)
};

struct CyclotomicField {
    unsigned m = 1;
    unsigned phi = 1;
    std::vector<Integer> poly; // monic, size phi + 1
    std::vector<unsigned> units;

    mutable std::mutex proj_mutex;
    mutable std::map<unsigned, std::unique_ptr<SubfieldProjector>> projectors;
};

} // namespace detail

namespace {

std::atomic<unsigned> g_order_cap{1u << 16};

std::vector<unsigned> divisors(unsigned m)
{
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

// Exact division of integer polynomials (constant term first); divisor monic.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer> &den)
{
    const std::size_t dn = den.size() - 1;
    if (num.size() <= dn) {
        return {Integer(0)};
    }
    std::vector<Integer> q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dn; ++j) {
                num[i - dn + j] -= c * den[j];
            }
        }
    }
    return q;
}

class FieldRegistry {
public:
    const detail::CyclotomicField *get(unsigned m)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return get_locked(m);
    }

private:
    const detail::CyclotomicField *get_locked(unsigned m)
    {
        auto it = fields_.find(m);
        if (it != fields_.end()) {
            return it->second.get();
        }
        auto f = std::make_unique<detail::CyclotomicField>();
        f->m = m;
        // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
        std::vector<Integer> p(m + 1, Integer(0));
        p[0] = -1;
        p[m] = 1;
        for (unsigned d : divisors(m)) {
            if (d < m) {
                p = poly_divide_exact(p, get_locked(d)->poly);
            }
        }
        f->poly = p;
        f->phi = static_cast<unsigned>(p.size() - 1);
        for (unsigned j = 1; j <= m; ++j) {
            if (std::gcd(j % m, m) == 1 || m == 1) {
                f->units.push_back(j % m);
            }
        }
        std::sort(f->units.begin(), f->units.end());
        f->units.erase(std::unique(f->units.begin(), f->units.end()), f->units.end());
        auto *raw = f.get();
        fields_.emplace(m, std::move(f));
        return raw;
    }

    std::mutex mutex_;
    std::map<unsigned, std::unique_ptr<detail::CyclotomicField>> fields_;
};

FieldRegistry &registry()
{
    static FieldRegistry r;
    return r;
}

const detail::CyclotomicField *field_of(unsigned m)
{
    if (m == 0) {
        throw InvalidArgument("cyclotomic order must be positive");
    }
    if (m > g_order_cap.load()) {
        throw OrderOverflow("cyclotomic order " + std::to_string(m) + " exceeds cap " +
                            std::to_string(g_order_cap.load()));
    }
    return registry().get(m);
}

// Reduce a raw coefficient vector (any length) modulo the field polynomial.
void reduce(std::vector<Integer> &raw, const detail::CyclotomicField &f)
{
    const std::size_t phi = f.phi;
    for (std::size_t d = raw.size(); d-- > phi;) {
        if (raw[d] == 0) {
            continue;
        }
        const Integer c = raw[d];
        for (std::size_t j = 0; j < phi; ++j) {
            if (f.poly[j] != 0) {
                raw[d - phi + j] -= c * f.poly[j];
            }
        }
        raw[d] = 0;
    }
    raw.resize(phi);
}

unsigned lcm_checked(unsigned a, unsigned b)
{
    const unsigned long long l = std::lcm<unsigned long long>(a, b);
    if (l > g_order_cap.load()) {
        throw OrderOverflow("promotion to order " + std::to_string(l) + " exceeds cap " +
                            std::to_string(g_order_cap.load()));
    }
    return static_cast<unsigned>(l);
}

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::vector<Rational>> invert_rational(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            throw ConsistencyError("singular subfield basis matrix");
        }
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Rational piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && a[r][c] != 0) {
                const Rational f = a[r][c];
                for (std::size_t j = 0; j < n; ++j) {
                    a[r][j] -= f * a[c][j];
                    inv[r][j] -= f * inv[c][j];
                }
            }
        }
    }
    return inv;
}

} // namespace

unsigned cyclotomic_order_cap() noexcept { return g_order_cap.load(); }
void set_cyclotomic_order_cap(unsigned cap) noexcept { g_order_cap.store(cap); }

unsigned euler_phi(unsigned m) { return field_of(m)->phi; }

const std::vector<Integer> &cyclotomic_polynomial(unsigned m) { return field_of(m)->poly; }

std::string rational_to_string(const Rational &r)
{
    return r.get_str();
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic() : field_(field_of(1)), num_(1, Integer(0)), den_(1) {}

Cyclotomic::Cyclotomic(long value) : field_(field_of(1)), num_(1, Integer(value)), den_(1) {}

Cyclotomic::Cyclotomic(const Integer &value) : field_(field_of(1)), num_(1, value), den_(1) {}

Cyclotomic::Cyclotomic(const Rational &value)
    : field_(field_of(1)), num_(1, value.get_num()), den_(value.get_den())
{
}

Cyclotomic::Cyclotomic(const detail::CyclotomicField *field, std::vector<Integer> num, Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void Cyclotomic::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto &c : num_) {
            c = -c;
        }
    }
    Integer g = den_;
    bool all_zero = true;
    for (const auto &c : num_) {
        if (c != 0) {
            all_zero = false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) {
                break;
            }
        }
    }
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto &c : num_) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Cyclotomic Cyclotomic::zeta(unsigned m, long k)
{
    const auto *f = field_of(m);
    std::vector<Integer> raw(m, Integer(0));
    raw[static_cast<std::size_t>(mod(k, m))] = 1;
    reduce(raw, *f);
    return Cyclotomic(f, std::move(raw), Integer(1));
}

Cyclotomic Cyclotomic::cos_2pi(unsigned n, long k)
{
    return (zeta(n, k) + zeta(n, -k)) / Cyclotomic(2);
}

Cyclotomic Cyclotomic::sin_2pi(unsigned n, long k)
{
    // (z - z^-1) / (2i) = -i (z - z^-1) / 2
    return (zeta(n, k) - zeta(n, -k)) * (-zeta(4, 1)) / Cyclotomic(2);
}

unsigned Cyclotomic::order() const noexcept { return field_->m; }
unsigned Cyclotomic::degree() const noexcept { return field_->phi; }

Rational Cyclotomic::coefficient(unsigned j) const
{
    if (j >= num_.size()) {
        return Rational(0);
    }
    Rational r(num_[j], den_);
    r.canonicalize();
    return r;
}

bool Cyclotomic::is_zero() const noexcept
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer &c) { return c == 0; });
}

bool Cyclotomic::is_one() const
{
    return is_rational() && num_[0] == den_;
}

bool Cyclotomic::is_rational() const noexcept
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer &c) { return c == 0; });
}

bool Cyclotomic::is_real() const { return conj() == *this; }

bool Cyclotomic::is_imaginary() const { return conj() == -*this; }

Rational Cyclotomic::to_rational() const
{
    if (!is_rational()) {
        throw InvalidArgument("value " + to_string() + " is not rational");
    }
    return coefficient(0);
}

Cyclotomic Cyclotomic::galois(long j) const
{
    const unsigned m = field_->m;
    if (m <= 2) {
        return *this;
    }
    if (std::gcd(mod(j, m), static_cast<long>(m)) != 1) {
        throw InvalidArgument("Galois exponent must be coprime to the order");
    }
    std::vector<Integer> raw(m, Integer(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] != 0) {
            raw[static_cast<std::size_t>(mod(static_cast<long>(i) * j, m))] += num_[i];
        }
    }
    reduce(raw, *field_);
    return Cyclotomic(field_, std::move(raw), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (is_rational()) {
        Rational r(num_[0], den_);
        r.canonicalize();
        return Cyclotomic(Rational(1) / r);
    }
    // a^{-1} = (prod_{sigma != id} sigma(a)) / N(a)
    Cyclotomic others(1);
    for (unsigned j : field_->units) {
        if (j != 1) {
            others *= galois(j);
        }
    }
    Cyclotomic norm = *this * others;
    if (!norm.is_rational() || norm.is_zero()) {
        throw ConsistencyError("field norm is not a nonzero rational");
    }
    return others.rational_scaled(Rational(1) / norm.to_rational());
}

Cyclotomic Cyclotomic::promoted(unsigned order) const
{
    const unsigned m = field_->m;
    if (order == m) {
        return *this;
    }
    if (order % m != 0) {
        throw InvalidArgument("cannot promote order " + std::to_string(m) + " to " + std::to_string(order));
    }
    const auto *f = field_of(order);
    if (is_rational()) {
        std::vector<Integer> raw(f->phi, Integer(0));
        raw[0] = num_[0];
        return Cyclotomic(f, std::move(raw), den_);
    }
    const unsigned step = order / m;
    std::vector<Integer> raw(order, Integer(0));
    for (std::size_t j = 0; j < num_.size(); ++j) {
        raw[j * step] = num_[j];
    }
    reduce(raw, *f);
    return Cyclotomic(f, std::move(raw), den_);
}

Cyclotomic Cyclotomic::minimized() const
{
    const unsigned m = field_->m;
    if (is_rational()) {
        return Cyclotomic(coefficient(0));
    }
    for (unsigned d : divisors(m)) {
        if (d == m) {
            break;
        }
        // a lies in Q(zeta_d) iff it is fixed by every sigma_j with j = 1 mod d.
        bool fixed = true;
        for (unsigned j : field_->units) {
            if (j % d == 1 % d && j != 1 && galois(j) != *this) {
                fixed = false;
                break;
            }
        }
        if (!fixed) {
            continue;
        }
        const detail::SubfieldProjector *proj = nullptr;
        {
            std::lock_guard<std::mutex> lock(field_->proj_mutex);
            auto &slot = field_->projectors[d];
            if (!slot) {
                auto p = std::make_unique<detail::SubfieldProjector>();
                p->sub_order = d;
                const unsigned pd = euler_phi(d);
                // columns: images of zeta_d^k, k < phi(d)
                std::vector<std::vector<Rational>> cols;
                for (unsigned k = 0; k < pd; ++k) {
                    Cyclotomic img = zeta(d, k).promoted(m);
                    std::vector<Rational> col(field_->phi);
                    for (unsigned r = 0; r < field_->phi; ++r) {
                        col[r] = img.coefficient(r);
                    }
                    cols.push_back(std::move(col));
                }
                // choose pd independent rows greedily
                std::vector<std::vector<Rational>> basis;
                std::vector<unsigned> rows;
                std::vector<std::vector<Rational>> reduced;
                for (unsigned r = 0; r < field_->phi && rows.size() < pd; ++r) {
                    std::vector<Rational> row(pd);
                    for (unsigned k = 0; k < pd; ++k) {
                        row[k] = cols[k][r];
                    }
                    std::vector<Rational> v = row;
                    for (const auto &b : reduced) {
                        std::size_t lead = 0;
                        while (b[lead] == 0) {
                            ++lead;
                        }
                        if (v[lead] != 0) {
                            const Rational f = v[lead] / b[lead];
                            for (unsigned k = 0; k < pd; ++k) {
                                v[k] -= f * b[k];
                            }
                        }
                    }
                    if (std::any_of(v.begin(), v.end(), [](const Rational &x) { return x != 0; })) {
                        reduced.push_back(v);
                        rows.push_back(r);
                        basis.push_back(row);
                    }
                }
                p->rows = rows;
                p->inv = invert_rational(basis);
                slot = std::move(p);
            }
            proj = slot.get();
        }
        const unsigned pd = static_cast<unsigned>(proj->rows.size());
        std::vector<Rational> rhs(pd);
        for (unsigned i = 0; i < pd; ++i) {
            rhs[i] = coefficient(proj->rows[i]);
        }
        Rational common(1);
        std::vector<Rational> coords(pd, Rational(0));
        for (unsigned i = 0; i < pd; ++i) {
            for (unsigned j = 0; j < pd; ++j) {
                coords[i] += proj->inv[i][j] * rhs[j];
            }
        }
        Cyclotomic out;
        for (unsigned k = 0; k < pd; ++k) {
            if (coords[k] != 0) {
                out += zeta(d, k).rational_scaled(coords[k]);
            }
        }
        if (out.order() != d) {
            out = out.promoted(d);
        }
        if (out != *this) {
            throw ConsistencyError("subfield projection failed for " + key_at(m));
        }
        return out;
    }
    return *this;
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic result(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Cyclotomic Cyclotomic::rational_scaled(const Rational &r) const
{
    std::vector<Integer> num = num_;
    for (auto &c : num) {
        c *= r.get_num();
    }
    return Cyclotomic(field_, std::move(num), den_ * r.get_den());
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (field_ != o.field_ && !o.is_rational()) {
        if (is_rational() && o.field_->m % field_->m == 0) {
            *this = promoted(o.field_->m);
        } else {
            const unsigned l = lcm_checked(field_->m, o.field_->m);
            *this = promoted(l);
            return *this += o.promoted(l);
        }
    }
    if (field_ != o.field_) {
        // o is rational
        if (den_ == o.den_) {
            num_[0] += o.num_[0];
        } else {
            for (auto &c : num_) {
                c *= o.den_;
            }
            num_[0] += o.num_[0] * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    if (den_ == o.den_) {
        for (std::size_t j = 0; j < num_.size(); ++j) {
            num_[j] += o.num_[j];
        }
    } else {
        for (std::size_t j = 0; j < num_.size(); ++j) {
            num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
        }
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto &c : r.num_) {
        c = -c;
    }
    return r;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o)
{
    if (o.is_rational()) {
        for (auto &c : num_) {
            c *= o.num_[0];
        }
        den_ *= o.den_;
        normalize();
        return *this;
    }
    if (is_rational()) {
        Cyclotomic r = o;
        for (auto &c : r.num_) {
            c *= num_[0];
        }
        r.den_ *= den_;
        r.normalize();
        return *this = std::move(r);
    }
    if (field_ != o.field_) {
        const unsigned l = lcm_checked(field_->m, o.field_->m);
        *this = promoted(l);
        return *this *= o.promoted(l);
    }
    const std::size_t phi = field_->phi;
    std::vector<Integer> raw(2 * phi - 1, Integer(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (num_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < phi; ++j) {
            if (o.num_[j] != 0) {
                mpz_addmul(raw[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
            }
        }
    }
    reduce(raw, *field_);
    num_ = std::move(raw);
    den_ *= o.den_;
    normalize();
    return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &o)
{
    if (o.is_zero()) {
        throw DivisionByZero();
    }
    return *this *= o.inverse();
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.field_ == b.field_) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    if (a.is_rational() && b.is_rational()) {
        return a.den_ == b.den_ && a.num_[0] == b.num_[0];
    }
    const unsigned l = lcm_checked(a.field_->m, b.field_->m);
    const Cyclotomic pa = a.promoted(l);
    const Cyclotomic pb = b.promoted(l);
    return pa.den_ == pb.den_ && pa.num_ == pb.num_;
}

bool structural_less(const Cyclotomic &a, const Cyclotomic &b)
{
    if (a.field_->m != b.field_->m) {
        return a.field_->m < b.field_->m;
    }
    if (a.den_ != b.den_) {
        return a.den_ < b.den_;
    }
    return a.num_ < b.num_;
}

bool VectorStructuralLess::operator()(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) const
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), structural_less);
}

std::string Cyclotomic::key_at(unsigned order) const
{
    const Cyclotomic p = promoted(order);
    std::string s = std::to_string(order) + ":" + p.den_.get_str(16);
    for (const auto &c : p.num_) {
        s += ',';
        s += c.get_str(16);
    }
    return s;
}

std::string Cyclotomic::to_string() const
{
    const Cyclotomic a = minimized();
    if (a.is_rational()) {
        return rational_to_string(a.coefficient(0));
    }
    std::string out;
    bool first = true;
    for (unsigned j = 0; j < a.num_.size(); ++j) {
        if (a.num_[j] == 0) {
            continue;
        }
        Rational c = a.coefficient(j);
        const bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        std::string mag;
        const std::string base = "E(" + std::to_string(a.order()) + ")^" + std::to_string(j);
        if (j == 0) {
            mag = rational_to_string(c);
        } else if (c == 1) {
            mag = base;
        } else if (c.get_den() == 1) {
            mag = c.get_num().get_str() + "*" + base;
        } else {
            mag = "(" + rational_to_string(c) + ")*" + base;
        }
        if (first) {
            out += negative ? "-" + mag : mag;
            first = false;
        } else {
            out += negative ? " - " + mag : " + " + mag;
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Cyclotomic &a) { return os << a.to_string(); }

} // namespace reflinv
