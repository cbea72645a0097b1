#ifndef REFLINV_EIGENSPACE_HPP
#define REFLINV_EIGENSPACE_HPP

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "reflinv/invariants.hpp"
#include "reflinv/linalg.hpp"
#include "reflinv/matrix_group.hpp"
#include "reflinv/numeric.hpp"
#include "reflinv/polynomial.hpp"

namespace reflinv {

// lambda in C^n with purely imaginary entries.
struct Weight {
    Vector lambda;
    const ReflectionGroup *group = nullptr;
};

Weight make_weight(const ReflectionGroup &g, Vector lambda);
// "i*1, i*2": comma separated scalars in the exact-scalar syntax.
Weight parse_weight(const ReflectionGroup &g, const std::string &text);
std::string weight_to_string(const Weight &w);

// No non-identity element fixes lambda.
bool is_generic(const Weight &w);

struct Orbit {
    std::vector<Vector> points;           // points[h] = h * lambda
    std::vector<std::size_t> class_of;    // points[h] == points[h'] iff class_of equal
    std::vector<std::size_t> class_sizes; // multiplicity of each class
    std::size_t distinct() const noexcept { return class_sizes.size(); }
};

Orbit orbit(const Weight &w);

// sum_j c_j exp(s_j), merged by equal argument.
class FormalExp {
public:
    FormalExp() = default;
    FormalExp(const Cyclotomic &c); // NOLINT: c * exp(0)
    static FormalExp exp(const Cyclotomic &argument, const Cyclotomic &coefficient = Cyclotomic(1));

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Cyclotomic, Cyclotomic, StructuralLess> &terms() const noexcept { return terms_; }

    FormalExp &operator+=(const FormalExp &o);
    FormalExp &operator-=(const FormalExp &o);
    friend FormalExp operator+(FormalExp a, const FormalExp &b) { return a += b; }
    friend FormalExp operator-(FormalExp a, const FormalExp &b) { return a -= b; }
    friend FormalExp operator*(const FormalExp &a, const FormalExp &b);
    friend bool operator==(const FormalExp &a, const FormalExp &b);
    friend bool operator!=(const FormalExp &a, const FormalExp &b) { return !(a == b); }

    // Multiply by exp(s).
    FormalExp shifted(const Cyclotomic &s) const;
    Complex evaluate() const;
    std::string to_string() const;

private:
    void add(const Cyclotomic &argument, const Cyclotomic &coefficient);
    std::map<Cyclotomic, Cyclotomic, StructuralLess> terms_; // keys minimized
};

// sum_j F_j(...) e^{<mu_j, x>}; exponents minimized and merged.
class PlaneWaveSum {
public:
    using Terms = std::map<Vector, FormalExp, VectorStructuralLess>;

    static PlaneWaveSum wave(const Vector &exponent, const FormalExp &coefficient = FormalExp(Cyclotomic(1)));

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    PlaneWaveSum &operator+=(const PlaneWaveSum &o);
    friend PlaneWaveSum operator+(PlaneWaveSum a, const PlaneWaveSum &b) { return a += b; }
    friend bool operator==(const PlaneWaveSum &a, const PlaneWaveSum &b);
    friend bool operator!=(const PlaneWaveSum &a, const PlaneWaveSum &b) { return !(a == b); }
    PlaneWaveSum scaled(const FormalExp &c) const;

    // Value at an exact real point: sum_j F_j exp(<mu_j, x>).
    FormalExp evaluate_at(const Vector &x) const;

private:
    void add(const Vector &exponent, const FormalExp &c);
    Terms terms_;
};

Vector minimized(const Vector &v);
Cyclotomic dot(const Vector &a, const Vector &b);

// The |K|-dimensional model of the induced representation, basis indexed by
// the elements h of K: (pi(y, k) v)(h) = exp(-<mu_h, y>) v(k^{-1} h).
struct InducedModel {
    Weight weight;
    Orbit orbit;
    std::size_t dimension() const noexcept { return orbit.points.size(); }
    const ReflectionGroup &group() const { return *weight.group; }
};

using CoeffVector = std::vector<FormalExp>;

InducedModel make_model(const Weight &w);
CoeffVector model_act(const InducedModel &m, const GroupElement &g, const CoeffVector &v);
CoeffVector all_ones(const InducedModel &m);
CoeffVector delta(const InducedModel &m, std::size_t h);

// Numeric matrix of pi(g) at the current working precision.
ComplexMatrix model_matrix(const InducedModel &m, const GroupElement &g);
// max |pi(g) pi(g)^* - I| in the embedding at `bits` of precision.
Real unitarity_defect(const InducedModel &m, const GroupElement &g, unsigned bits);

// Rank of {pi^c(g) u* : g in samples} in the numeric embedding. The row for
// g = (y, k) is h -> exp(<mu_h, y>).
std::size_t dual_orbit_rank(const InducedModel &m, const std::vector<GroupElement> &samples, unsigned bits);
// Requires a sample for every rotation part; true iff the rank is |K|.
bool dual_cyclic_check(const InducedModel &m, const std::vector<GroupElement> &samples, unsigned bits = 128);

// F(v) = sum_h v(h) e^{<mu_h, x>}.
PlaneWaveSum intertwiner(const InducedModel &m, const CoeffVector &v);

// (T(y, k) f)(x) = f(k^{-1}(x - y)) on plane-wave sums.
PlaneWaveSum plane_wave_act(const ReflectionGroup &g, const GroupElement &element, const PlaneWaveSum &f);

// P(d/dx) on a plane-wave sum: multiplies each term by P(mu).
PlaneWaveSum apply_operator(const Poly &symbol, const PlaneWaveSum &f);

// j_i(mu) == j_i(lambda) for every exponent mu of p and every generator.
bool eigen_check(const PlaneWaveSum &p, const FundamentalInvariants &f, const Weight &w);

// F(pi(g) v) == T(g) F(v), formally.
bool equivariance_check(const InducedModel &m, const GroupElement &g, const CoeffVector &v);

struct EvaluationMatrix {
    Matrix values;                      // values(i, k) = H_i(mu_k)
    std::vector<Cyclotomic> column_exp; // column k carries exp(column_exp[k])
    std::size_t rank() const;
};

EvaluationMatrix evaluation_matrix(const Weight &w, const HarmonicSpace &h, const Vector &base_point = {});

struct CommutantResult {
    std::size_t exact = 0;
    std::size_t numeric = 0;
    std::size_t components = 0; // connected blocks in the numeric system
};

// Exact path: number of K-orbits on pairs (h, h') with mu_h == mu_h'.
std::size_t commutant_dimension_exact(const InducedModel &m);
// Numeric path: nullspace dimension of {A pi(g) - pi(g) A} over the samples.
std::size_t commutant_dimension_numeric(const InducedModel &m, const std::vector<GroupElement> &samples,
                                        unsigned bits, std::size_t *components = nullptr);
// Both paths; throws ConsistencyError when they disagree and
// InsufficientSamples when the pure translations among the samples do not
// span R^n or the rotation parts do not generate K.
CommutantResult commutant_dimension(const InducedModel &m, const std::vector<GroupElement> &samples,
                                    unsigned bits = 128);

// n pure translations spanning R^n, then one element per rotation part; all
// translations are distinct small integer vectors.
std::vector<GroupElement> standard_samples(const ReflectionGroup &g, std::mt19937_64 &rng);

// i * (random integer vector), retried until generic.
Weight random_generic_weight(const ReflectionGroup &g, std::mt19937_64 &rng);
// i * (I + s) v for a pseudo-reflection s: fixed by s, hence not generic.
Weight degenerate_weight(const ReflectionGroup &g, std::size_t reflection, std::mt19937_64 &rng);
CoeffVector random_coefficients(const InducedModel &m, std::mt19937_64 &rng);

} // namespace reflinv

#endif
