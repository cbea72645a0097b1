#include "reflinv/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "reflinv/error.hpp"
#include "reflinv/linalg.hpp"
#include "reflinv/molien.hpp"

namespace reflinv {

std::vector<std::size_t> HarmonicSpace::dims() const
{
    std::vector<std::size_t> d;
    for (const auto &b : basis) {
        d.push_back(b.size());
    }
    return d;
}

std::vector<Poly> HarmonicSpace::flattened() const
{
    std::vector<Poly> out;
    for (const auto &b : basis) {
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

namespace {

void weighted_rec(const std::vector<unsigned> &degrees, std::size_t i, unsigned remaining, std::vector<unsigned> &cur,
                  std::vector<std::vector<unsigned>> &out)
{
    if (i == degrees.size()) {
        if (remaining == 0) {
            out.push_back(cur);
        }
        return;
    }
    for (unsigned e = remaining / degrees[i] + 1; e-- > 0;) {
        cur[i] = e;
        weighted_rec(degrees, i + 1, remaining - e * degrees[i], cur, out);
    }
    cur[i] = 0;
}

std::vector<unsigned> degrees_of(const std::vector<Poly> &gens)
{
    std::vector<unsigned> d;
    for (const auto &p : gens) {
        if (p.is_zero() || !p.is_homogeneous() || p.degree() == 0) {
            throw InvalidArgument("subalgebra generators must be nonzero homogeneous of positive degree");
        }
        d.push_back(static_cast<unsigned>(p.degree()));
    }
    return d;
}

// Products j^e for all weighted exponent vectors, with cached powers.
std::vector<Poly> products(const std::vector<Poly> &gens, const std::vector<std::vector<unsigned>> &exps,
                           std::size_t n)
{
    std::vector<std::vector<Poly>> powers(gens.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly & {
        auto &pw = powers[i];
        if (pw.empty()) {
            pw.push_back(Poly::constant(n, Cyclotomic(1)));
        }
        while (pw.size() <= e) {
            pw.push_back(pw.back() * gens[i]);
        }
        return pw[e];
    };
    std::vector<Poly> out;
    out.reserve(exps.size());
    for (const auto &e : exps) {
        Poly p = Poly::constant(n, Cyclotomic(1));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                p = p * power(i, e[i]);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

std::vector<std::vector<unsigned>> weighted_monomials(const std::vector<unsigned> &degrees, unsigned k)
{
    for (auto d : degrees) {
        if (d == 0) {
            throw InvalidArgument("degrees must be positive");
        }
    }
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(degrees.size(), 0);
    weighted_rec(degrees, 0, k, cur, out);
    return out;
}

std::vector<Poly> subalgebra_products(const std::vector<Poly> &generators, unsigned k)
{
    if (generators.empty()) {
        throw InvalidArgument("empty generator list");
    }
    const std::size_t n = generators.front().dimension();
    return products(generators, weighted_monomials(degrees_of(generators), k), n);
}

std::size_t subalgebra_dimension(const std::vector<Poly> &generators, unsigned k)
{
    const std::size_t n = generators.front().dimension();
    const GradedBasis basis(n, k);
    SpanBasis span(basis.size());
    for (const auto &p : subalgebra_products(generators, k)) {
        span.add(basis.coordinates(p));
    }
    return span.size();
}

bool in_subalgebra(const std::vector<Poly> &generators, const Poly &p)
{
    if (p.is_zero()) {
        return true;
    }
    if (!p.is_homogeneous()) {
        throw InvalidArgument("membership test needs a homogeneous polynomial");
    }
    const unsigned k = static_cast<unsigned>(p.degree());
    const GradedBasis basis(p.dimension(), k);
    SpanBasis span(basis.size());
    if (k == 0) {
        span.add(basis.coordinates(Poly::constant(p.dimension(), Cyclotomic(1))));
    }
    for (const auto &q : subalgebra_products(generators, k)) {
        span.add(basis.coordinates(q));
    }
    return span.contains(basis.coordinates(p));
}

FundamentalInvariants find_fundamental_invariants(const ReflectionGroup &g, const std::vector<unsigned> &degrees)
{
    FundamentalInvariants f;
    f.degrees = degrees;
    if (f.degrees.empty()) {
        f.degrees = extract_degrees(molien(g, default_truncation(g)), g.dimension(), g.order());
    }
    std::sort(f.degrees.begin(), f.degrees.end());
    if (f.degrees.size() != g.dimension()) {
        throw InvalidArgument("need exactly one degree per variable");
    }

    const std::size_t n = g.dimension();
    GroupActionCache cache(g);
    std::map<unsigned, std::size_t> needed;
    for (auto d : f.degrees) {
        ++needed[d];
    }
    for (const auto &[d, count] : needed) {
        const GradedBasis basis(n, d);
        SpanBasis span(basis.size());
        if (!f.generators.empty()) {
            for (const auto &p : subalgebra_products(f.generators, d)) {
                span.add(basis.coordinates(p));
            }
        }
        std::size_t found = 0;
        for (const auto &candidate : invariant_subspace(cache, d)) {
            if (found == count) {
                break;
            }
            const Vector coords = basis.coordinates(candidate);
            if (span.contains(coords)) {
                continue;
            }
            span.add(coords);
            f.generators.push_back(candidate * candidate.leading_coefficient().inverse());
            ++found;
        }
        if (found < count) {
            throw GeneratorSearchFailed("generator search failed: only " + std::to_string(found) + " of " +
                                        std::to_string(count) + " new invariants found in degree " +
                                        std::to_string(d));
        }
    }
    if (!jacobian_independent(f.generators)) {
        throw ConsistencyError("fundamental invariants are algebraically dependent");
    }
    return f;
}

HarmonicSpace compute_harmonics(const ReflectionGroup &g, const FundamentalInvariants &f)
{
    const std::size_t n = g.dimension();
    const unsigned top = std::accumulate(f.degrees.begin(), f.degrees.end(), 0u) - static_cast<unsigned>(n);
    const SeriesQ expected = harmonic_hilbert(f.degrees, top);

    HarmonicSpace h;
    for (unsigned k = 0; k <= top; ++k) {
        const GradedBasis source(n, k);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < f.generators.size(); ++i) {
            if (f.degrees[i] > k) {
                continue;
            }
            const GradedBasis target(n, k - f.degrees[i]);
            std::vector<Vector> columns;
            for (const auto &m : source.monomials()) {
                columns.push_back(target.coordinates(diff_apply(f.generators[i], Poly::term(n, m, Cyclotomic(1)))));
            }
            for (std::size_t r = 0; r < target.size(); ++r) {
                Vector row(source.size());
                for (std::size_t c = 0; c < source.size(); ++c) {
                    row[c] = columns[c][r];
                }
                rows.push_back(std::move(row));
            }
        }
        std::vector<Poly> layer;
        if (rows.empty()) {
            layer.assign(source.monomials().size(), Poly(n));
            for (std::size_t c = 0; c < source.size(); ++c) {
                layer[c] = Poly::term(n, source[c], Cyclotomic(1));
            }
        } else {
            for (const auto &v : nullspace(Matrix::from_rows(rows, source.size()))) {
                layer.push_back(source.polynomial(v));
            }
        }
        if (Rational(static_cast<unsigned long>(layer.size())) != expected[k]) {
            throw ConsistencyError("harmonic space has dimension " + std::to_string(layer.size()) + " in degree " +
                                   std::to_string(k) + ", expected " + rational_to_string(expected[k]));
        }
        h.total_dimension += layer.size();
        h.basis.push_back(std::move(layer));
    }
    if (h.total_dimension != g.order()) {
        throw ConsistencyError("harmonic space has total dimension " + std::to_string(h.total_dimension) +
                               ", expected " + std::to_string(g.order()));
    }
    return h;
}

DecompositionResult verify_product_decomposition(const ReflectionGroup &g, const FundamentalInvariants &f,
                                                 const HarmonicSpace &h, unsigned max_degree)
{
    const std::size_t n = g.dimension();
    DecompositionResult result;
    for (unsigned k = 0; k <= max_degree; ++k) {
        const GradedBasis basis(n, k);
        SpanBasis span(basis.size());
        std::size_t count = 0;
        for (unsigned l = 0; l <= k && l < h.basis.size(); ++l) {
            if (h.basis[l].empty()) {
                continue;
            }
            const auto invariant_part = products(f.generators, weighted_monomials(f.degrees, k - l), n);
            for (const auto &j : invariant_part) {
                for (const auto &harmonic : h.basis[l]) {
                    span.add(basis.coordinates(j * harmonic));
                    ++count;
                }
            }
        }
        result.checked_up_to = k;
        if (count != basis.size() || span.size() != basis.size()) {
            result.ok = false;
            result.failing_degree = k;
            return result;
        }
    }
    return result;
}

} // namespace reflinv
