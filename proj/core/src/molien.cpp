#include "reflinv/molien.hpp"

#include <algorithm>
#include <map>

#include "reflinv/error.hpp"
#include "reflinv/linalg.hpp"

namespace reflinv {

SeriesQ::SeriesQ(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}

SeriesQ SeriesQ::one(std::size_t truncation)
{
    std::vector<Rational> c(truncation + 1, Rational(0));
    c[0] = 1;
    return SeriesQ(std::move(c));
}

SeriesQ SeriesQ::free_series(std::size_t n, std::size_t truncation)
{
    std::vector<Rational> c(truncation + 1);
    for (std::size_t k = 0; k <= truncation; ++k) {
        if (n == 0) {
            c[k] = k == 0 ? 1 : 0;
            continue;
        }
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), k + n - 1, n - 1);
        c[k] = Rational(b);
    }
    return SeriesQ(std::move(c));
}

SeriesQ SeriesQ::operator*(const SeriesQ &o) const
{
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rational> r(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::operator+(const SeriesQ &o) const
{
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = c_[i] + o.c_[i];
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::reciprocal() const
{
    if (c_.empty() || c_[0] == 0) {
        throw DivisionByZero();
    }
    const Rational inv0 = 1 / c_[0];
    std::vector<Rational> r(c_.size(), Rational(0));
    r[0] = inv0;
    for (std::size_t m = 1; m < c_.size(); ++m) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            if (c_[j] != 0) {
                acc += c_[j] * r[m - j];
            }
        }
        r[m] = -acc * inv0;
    }
    return SeriesQ(std::move(r));
}

SeriesQ SeriesQ::truncated(std::size_t n) const
{
    std::vector<Rational> r(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n && i < c_.size(); ++i) {
        r[i] = c_[i];
    }
    return SeriesQ(std::move(r));
}

std::vector<long> SeriesQ::to_integers() const
{
    std::vector<long> out;
    out.reserve(c_.size());
    for (const auto &c : c_) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
            throw ConsistencyError("series coefficient " + rational_to_string(c) + " is not a machine integer");
        }
        out.push_back(c.get_num().get_si());
    }
    return out;
}

std::size_t default_truncation(const ReflectionGroup &g) { return std::max<std::size_t>(2 * g.order(), 16); }

std::vector<Cyclotomic> det_one_minus_t(const RMatrix &m)
{
    // Coefficient of t^j is (-1)^j times the sum of the j x j principal minors.
    const std::size_t n = m.rows();
    std::vector<Cyclotomic> coeffs(n + 1);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (s & (1u << i)) {
                idx.push_back(i);
            }
        }
        Matrix minor(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = 0; b < idx.size(); ++b) {
                minor(a, b) = m(idx[a], idx[b]);
            }
        }
        const Cyclotomic d = idx.empty() ? Cyclotomic(1) : determinant(minor);
        coeffs[idx.size()] += idx.size() % 2 ? -d : d;
    }
    return coeffs;
}

SeriesQ molien(const ReflectionGroup &g, std::size_t truncation)
{
    if (truncation < 1) {
        throw InvalidArgument("truncation must be at least 1");
    }
    // Conjugate elements share det(I - tk); invert each distinct one once.
    std::map<std::string, std::pair<std::vector<Cyclotomic>, std::size_t>> distinct;
    for (const auto &k : g.elements()) {
        auto poly = det_one_minus_t(k);
        std::string key;
        for (auto &c : poly) {
            c = c.minimized();
            key += std::to_string(c.order()) + ":" + c.key_at(c.order()) + "|";
        }
        auto [it, inserted] = distinct.try_emplace(key, std::move(poly), 0);
        ++it->second.second;
    }

    std::vector<Cyclotomic> total(truncation + 1);
    for (const auto &[key, entry] : distinct) {
        const auto &[poly, count] = entry;
        // 1 / poly with poly(0) = 1
        std::vector<Cyclotomic> r(truncation + 1);
        r[0] = Cyclotomic(1);
        for (std::size_t m = 1; m <= truncation; ++m) {
            Cyclotomic acc;
            for (std::size_t j = 1; j < poly.size() && j <= m; ++j) {
                if (!poly[j].is_zero() && !r[m - j].is_zero()) {
                    acc += poly[j] * r[m - j];
                }
            }
            r[m] = -acc;
        }
        const Cyclotomic weight(static_cast<long>(count));
        for (std::size_t m = 0; m <= truncation; ++m) {
            total[m] += weight * r[m];
        }
    }

    std::vector<Rational> coeffs(truncation + 1);
    const Rational inv_order(1, static_cast<unsigned long>(g.order()));
    for (std::size_t m = 0; m <= truncation; ++m) {
        const Cyclotomic c = total[m].minimized();
        if (!c.is_rational()) {
            throw ConsistencyError("Molien coefficient of t^" + std::to_string(m) + " is irrational: " + c.to_string());
        }
        coeffs[m] = c.to_rational() * inv_order;
        if (coeffs[m].get_den() != 1 || coeffs[m] < 0) {
            throw ConsistencyError("Molien coefficient of t^" + std::to_string(m) +
                                   " is not a nonnegative integer: " + rational_to_string(coeffs[m]));
        }
    }
    return SeriesQ(std::move(coeffs));
}

std::size_t fixed_space_dimension(const ReflectionGroup &g)
{
    const std::size_t n = g.dimension();
    Matrix sum(n, n);
    for (const auto &k : g.elements()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                sum(i, j) += k(i, j);
            }
        }
    }
    return rank(sum);
}

std::vector<unsigned> extract_degrees(const SeriesQ &s, std::size_t n, std::size_t order)
{
    if (s.truncation() < 1 || s[0] != 1) {
        throw NotReflectionSeries("not a reflection-group invariant series: constant term must be 1");
    }
    std::vector<Rational> q = s.reciprocal().coefficients();
    const std::size_t N = q.size() - 1;
    std::vector<unsigned> degrees;
    for (;;) {
        std::size_t d = 1;
        while (d <= N && q[d] == 0) {
            ++d;
        }
        if (d > N) {
            break; // q == 1 up to t^N
        }
        if (q[d] != -1) {
            throw NotReflectionSeries("not a reflection-group invariant series: coefficient " +
                                      rational_to_string(q[d]) + " of t^" + std::to_string(d) +
                                      " in the reciprocal series does not start a factor (1 - t^d)");
        }
        if (degrees.size() == n) {
            throw NotReflectionSeries("not a reflection-group invariant series: reciprocal series has more than " +
                                      std::to_string(n) + " factors (1 - t^d) within truncation " +
                                      std::to_string(N));
        }
        degrees.push_back(static_cast<unsigned>(d));
        // q <- q / (1 - t^d)
        for (std::size_t m = d; m <= N; ++m) {
            q[m] += q[m - d];
        }
    }
    if (degrees.size() != n) {
        throw NotReflectionSeries("not a reflection-group invariant series: found " + std::to_string(degrees.size()) +
                                  " factors, expected " + std::to_string(n));
    }
    Integer product(1);
    for (auto d : degrees) {
        product *= d;
    }
    if (product != static_cast<unsigned long>(order)) {
        throw NotReflectionSeries("not a reflection-group invariant series: product of degrees " +
                                  product.get_str() + " differs from group order " + std::to_string(order));
    }
    return degrees;
}

SeriesQ harmonic_hilbert(const std::vector<unsigned> &degrees, std::size_t truncation)
{
    std::vector<Rational> p{Rational(1)};
    Integer product(1);
    for (auto d : degrees) {
        if (d == 0) {
            throw InvalidArgument("degrees must be positive");
        }
        std::vector<Rational> next(p.size() + d - 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (unsigned j = 0; j < d; ++j) {
                next[i + j] += p[i];
            }
        }
        p = std::move(next);
        product *= d;
    }
    Rational total = 0;
    for (const auto &c : p) {
        total += c;
    }
    if (total != Rational(product)) {
        throw ConsistencyError("harmonic Hilbert polynomial sums to " + rational_to_string(total) + ", expected " +
                               product.get_str());
    }
    return SeriesQ(std::move(p)).truncated(truncation);
}

bool series_identity_check(const SeriesQ &molien_series, const std::vector<unsigned> &degrees, std::size_t n,
                           std::size_t truncation)
{
    if (molien_series.truncation() < truncation) {
        throw InvalidArgument("Molien series is shorter than the requested truncation");
    }
    const SeriesQ lhs = molien_series.truncated(truncation) * harmonic_hilbert(degrees, truncation);
    return lhs == SeriesQ::free_series(n, truncation);
}

bool series_identity_check(const ReflectionGroup &g, std::size_t truncation)
{
    const std::size_t N = std::max(truncation, default_truncation(g));
    const SeriesQ s = molien(g, N);
    const auto degrees = extract_degrees(s, g.dimension(), g.order());
    return series_identity_check(s, degrees, g.dimension(), truncation);
}

} // namespace reflinv
