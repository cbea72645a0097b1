#include <gtest/gtest.h>

#include <random>

#include "reflinv/eigenspace.hpp"
#include "reflinv/error.hpp"
#include "reflinv/invariants.hpp"
#include "reflinv/matrix_group.hpp"

using namespace reflinv;

namespace {

const Cyclotomic I = Cyclotomic::zeta(4);

// |{k : k lambda = lambda}| straight from the matrices.
std::size_t stabilizer_order(const ReflectionGroup &g, const Vector &lambda)
{
    std::size_t count = 0;
    for (const auto &k : g.elements()) {
        count += (k * lambda == lambda) ? 1 : 0;
    }
    return count;
}

} // namespace

TEST(Weight, ParseAndValidate)
{
    const ReflectionGroup g = builtin("dihedral:3");
    const Weight w = parse_weight(g, "i*1, i*2");
    EXPECT_EQ(w.lambda, (Vector{I, I * Cyclotomic(2)}));
    EXPECT_EQ(parse_weight(g, weight_to_string(w)).lambda, w.lambda);
    EXPECT_THROW(parse_weight(g, "1, i"), InvalidArgument); // real part
    EXPECT_THROW(parse_weight(g, "i"), InvalidArgument);    // wrong length
    try {
        parse_weight(g, "i*1, i*(2");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column(), 10u);
    }
}

TEST(Weight, Genericity)
{
    const ReflectionGroup g = builtin("dihedral:4");
    EXPECT_TRUE(is_generic(parse_weight(g, "i*1, i*2")));
    EXPECT_FALSE(is_generic(parse_weight(g, "i*1, i*0"))); // on a mirror
    EXPECT_FALSE(is_generic(parse_weight(g, "i*1, i*1"))); // on a diagonal mirror
    EXPECT_FALSE(is_generic(parse_weight(g, "0, 0")));
}

TEST(Orbit, SizesAndClasses)
{
    const ReflectionGroup g = builtin("dihedral:4");
    EXPECT_EQ(orbit(parse_weight(g, "i*1, i*2")).distinct(), 8u);
    const Orbit o = orbit(parse_weight(g, "i*1, i*0"));
    EXPECT_EQ(o.distinct(), 4u);
    for (auto s : o.class_sizes) {
        EXPECT_EQ(s, 2u);
    }
}

TEST(FormalExp, Algebra)
{
    const FormalExp a = FormalExp::exp(I, Cyclotomic(2));
    const FormalExp b = FormalExp::exp(-I, Cyclotomic(3));
    EXPECT_EQ(a * b, FormalExp(Cyclotomic(6)));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.shifted(-I), FormalExp(Cyclotomic(2)));
    EXPECT_NE(a + b, b);
    // exp(i pi) = -1 numerically but the formal sum keeps the argument.
    const Complex v = FormalExp::exp(I).evaluate();
    EXPECT_NEAR(v.re.convert_to<double>(), std::cos(1.0), 1e-15);
    EXPECT_NEAR(v.im.convert_to<double>(), std::sin(1.0), 1e-15);
}

TEST(Model, IsARepresentation)
{
    const ReflectionGroup g = builtin("dihedral:3");
    const InducedModel m = make_model(parse_weight(g, "i*1, i*2"));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        const GroupElement a = random_element(g, rng);
        const GroupElement b = random_element(g, rng);
        const CoeffVector v = random_coefficients(m, rng);
        EXPECT_EQ(model_act(m, g_multiply(g, a, b), v), model_act(m, a, model_act(m, b, v)));
    }
    EXPECT_EQ(model_act(m, g_identity(g), all_ones(m)), all_ones(m));
}

TEST(Model, NumericallyUnitary)
{
    const ReflectionGroup g = builtin("hyperoctahedral:2");
    const InducedModel m = make_model(parse_weight(g, "i*3, i*1"));
    std::mt19937_64 rng(8);
    for (int t = 0; t < 4; ++t) {
        EXPECT_LT(unitarity_defect(m, random_element(g, rng), 128), 1e-30);
    }
}

TEST(Intertwiner, EquivariantAndEigen)
{
    for (const std::string spec : {"dihedral:5", "symmetric:3", "hyperoctahedral:3"}) {
        const ReflectionGroup g = builtin(spec);
        const FundamentalInvariants f = find_fundamental_invariants(g);
        std::mt19937_64 rng(21);
        const Weight w = random_generic_weight(g, rng);
        const InducedModel m = make_model(w);
        for (int t = 0; t < 10; ++t) {
            EXPECT_TRUE(equivariance_check(m, random_element(g, rng), random_coefficients(m, rng))) << spec;
        }
        for (std::size_t h = 0; h < g.order(); ++h) {
            EXPECT_TRUE(eigen_check(intertwiner(m, delta(m, h)), f, w));
        }
    }
}

TEST(Intertwiner, PlaneWaveActionOnSingleWave)
{
    // T(y, k) e^{<mu, x>} = exp(-<k mu, y>) e^{<k mu, x>}
    const ReflectionGroup g = builtin("symmetric:2");
    const Vector mu = {I, I * Cyclotomic(2)};
    const Vector y = {Cyclotomic(1), Cyclotomic(0)};
    const std::size_t swap = g.order() == 2 ? 1 : 0;
    const PlaneWaveSum image = plane_wave_act(g, {y, swap}, PlaneWaveSum::wave(mu));
    const Vector kmu = {I * Cyclotomic(2), I};
    EXPECT_EQ(image, PlaneWaveSum::wave(kmu, FormalExp::exp(-(I * Cyclotomic(2)))));
}

TEST(Operators, SymbolEigenvalue)
{
    const ReflectionGroup g = builtin("dihedral:6");
    const Weight w = parse_weight(g, "i*2, i*5");
    const InducedModel m = make_model(w);
    const PlaneWaveSum fu = intertwiner(m, all_ones(m));
    const Poly laplace = Poly::parse("(x1^2 + x2^2)/4", 2);
    // (1/4)((2i)^2 + (5i)^2) = -29/4
    EXPECT_EQ(apply_operator(laplace, fu), fu.scaled(FormalExp(Cyclotomic(Rational(-29, 4)))));
}

TEST(Certificate, GenericWeightsAreIrreducible)
{
    for (const std::string spec : {"dihedral:4", "symmetric:3", "hyperoctahedral:2"}) {
        const ReflectionGroup g = builtin(spec);
        const FundamentalInvariants f = find_fundamental_invariants(g);
        const HarmonicSpace h = compute_harmonics(g, f);
        std::mt19937_64 rng(31);
        for (int t = 0; t < 3; ++t) {
            const Weight w = random_generic_weight(g, rng);
            const InducedModel m = make_model(w);
            EXPECT_EQ(evaluation_matrix(w, h).rank(), g.order());
            const CommutantResult c = commutant_dimension(m, standard_samples(g, rng));
            EXPECT_EQ(c.exact, 1u);
            EXPECT_EQ(c.numeric, 1u);
        }
    }
}

TEST(Certificate, DegenerateWeightsMatchStabilizer)
{
    const ReflectionGroup g = builtin("hyperoctahedral:2");
    const FundamentalInvariants f = find_fundamental_invariants(g);
    const HarmonicSpace h = compute_harmonics(g, f);
    std::mt19937_64 rng(41);
    const auto reflections = g.reflection_indices();
    for (std::size_t r = 0; r < reflections.size(); ++r) {
        const Weight w = degenerate_weight(g, reflections[r], rng);
        const InducedModel m = make_model(w);
        const std::size_t stab = stabilizer_order(g, w.lambda);
        EXPECT_GT(stab, 1u);
        EXPECT_EQ(evaluation_matrix(w, h).rank(), g.order() / stab);
        EXPECT_EQ(commutant_dimension(m, standard_samples(g, rng)).exact, stab);
    }
    const Weight zero = parse_weight(g, "0, 0");
    EXPECT_EQ(commutant_dimension(make_model(zero), standard_samples(g, rng)).numeric, g.order());
}

TEST(Certificate, InsufficientSamplesAreRejected)
{
    const ReflectionGroup g = builtin("dihedral:3");
    std::mt19937_64 rng(2);
    const InducedModel m = make_model(random_generic_weight(g, rng));
    std::vector<GroupElement> translations_only = {{{Cyclotomic(1), Cyclotomic(0)}, 0},
                                                   {{Cyclotomic(0), Cyclotomic(1)}, 0}};
    EXPECT_THROW(commutant_dimension(m, translations_only), InsufficientSamples);
    EXPECT_THROW(dual_cyclic_check(m, translations_only), InsufficientSamples);
    EXPECT_TRUE(dual_cyclic_check(m, standard_samples(g, rng)));
}
