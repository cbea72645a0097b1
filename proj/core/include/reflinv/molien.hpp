#ifndef REFLINV_MOLIEN_HPP
#define REFLINV_MOLIEN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "reflinv/cyclotomic.hpp"
#include "reflinv/matrix_group.hpp"

namespace reflinv {

// Truncated power series sum_{k=0}^{N} c_k t^k over Q.
class SeriesQ {
public:
    SeriesQ() = default;
    explicit SeriesQ(std::vector<Rational> coefficients);

    static SeriesQ one(std::size_t truncation);
    // (1 - t)^{-n} up to t^N.
    static SeriesQ free_series(std::size_t n, std::size_t truncation);

    std::size_t truncation() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Rational> &coefficients() const noexcept { return c_; }
    const Rational &operator[](std::size_t k) const { return c_.at(k); }

    // Results are truncated to the smaller of the two truncations.
    SeriesQ operator*(const SeriesQ &o) const;
    SeriesQ operator+(const SeriesQ &o) const;
    // Requires a nonzero constant term.
    SeriesQ reciprocal() const;
    SeriesQ truncated(std::size_t n) const;

    // Coefficients as machine integers; throws ConsistencyError otherwise.
    std::vector<long> to_integers() const;

    friend bool operator==(const SeriesQ &a, const SeriesQ &b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

// max(2 |K|, 16)
std::size_t default_truncation(const ReflectionGroup &g);

// det(I - t m) as coefficients of t^0..t^n.
std::vector<Cyclotomic> det_one_minus_t(const RMatrix &m);

// (1/|K|) sum_k det(I - t k)^{-1} up to t^N. Every coefficient is checked to
// be a nonnegative rational integer (ConsistencyError otherwise).
SeriesQ molien(const ReflectionGroup &g, std::size_t truncation);

// dim of the subspace fixed by every element: rank of (1/|K|) sum_k k.
std::size_t fixed_space_dimension(const ReflectionGroup &g);

// Reads off d_1 <= ... <= d_n from s = prod (1 - t^{d_i})^{-1}, by stripping
// the lowest factor (1 - t^d) from 1/s until 1 remains. Throws
// NotReflectionSeries when 1/s is not such a product within the truncation,
// when the factor count differs from n, or when prod d_i != order.
std::vector<unsigned> extract_degrees(const SeriesQ &s, std::size_t n, std::size_t order);

// prod_i (1 + t + ... + t^{d_i - 1}) up to t^N (padded with zeros). The full
// product is checked to sum to prod d_i.
SeriesQ harmonic_hilbert(const std::vector<unsigned> &degrees, std::size_t truncation);

// molien * harmonic_hilbert == (1 - t)^{-n} up to t^N.
bool series_identity_check(const SeriesQ &molien_series, const std::vector<unsigned> &degrees, std::size_t n,
                           std::size_t truncation);
bool series_identity_check(const ReflectionGroup &g, std::size_t truncation);

} // namespace reflinv

#endif
