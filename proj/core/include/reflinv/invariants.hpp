#ifndef REFLINV_INVARIANTS_HPP
#define REFLINV_INVARIANTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "reflinv/matrix_group.hpp"
#include "reflinv/polynomial.hpp"

namespace reflinv {

struct FundamentalInvariants {
    std::vector<Poly> generators; // homogeneous, ascending degree
    std::vector<unsigned> degrees;
};

struct HarmonicSpace {
    // basis[k] spans the harmonic polynomials of degree k, k = 0..top.
    std::vector<std::vector<Poly>> basis;
    std::size_t total_dimension = 0;

    std::vector<std::size_t> dims() const;
    // All basis polynomials, ascending degree.
    std::vector<Poly> flattened() const;
};

// Exponent vectors e with sum_i e_i * degrees[i] == k.
std::vector<std::vector<unsigned>> weighted_monomials(const std::vector<unsigned> &degrees, unsigned k);

// Spanning set of the degree-k part of the algebra generated by homogeneous
// polynomials: all products j^e of weighted degree k.
std::vector<Poly> subalgebra_products(const std::vector<Poly> &generators, unsigned k);
std::size_t subalgebra_dimension(const std::vector<Poly> &generators, unsigned k);
// Membership of a homogeneous polynomial in the generated subalgebra.
bool in_subalgebra(const std::vector<Poly> &generators, const Poly &p);

// Degree-by-degree generator search. Uses the supplied degrees, or the ones
// read off the Molien series when empty. Throws GeneratorSearchFailed when no
// new invariant exists at a required degree.
FundamentalInvariants find_fundamental_invariants(const ReflectionGroup &g,
                                                  const std::vector<unsigned> &degrees = {});

// H^k = common kernel of d(j_i) : S^k -> S^{k - d_i}, for k = 0..sum(d_i - 1).
// Dimensions are checked against the harmonic Hilbert polynomial and the
// total against |K| (ConsistencyError otherwise).
HarmonicSpace compute_harmonics(const ReflectionGroup &g, const FundamentalInvariants &f);

struct DecompositionResult {
    bool ok = true;
    std::optional<unsigned> failing_degree;
    std::size_t checked_up_to = 0;
};

// For k <= max_degree, products (monomial in j) * (harmonic of degree l)
// span S^k and their count equals dim S^k.
DecompositionResult verify_product_decomposition(const ReflectionGroup &g, const FundamentalInvariants &f,
                                                 const HarmonicSpace &h, unsigned max_degree);

} // namespace reflinv

#endif
