#include <gtest/gtest.h>

#include <random>

#include "reflinv/error.hpp"
#include "reflinv/linalg.hpp"
#include "reflinv/matrix_group.hpp"
#include "reflinv/polynomial.hpp"

using namespace reflinv;

namespace {

Poly P(const std::string &s, std::size_t n = 2) { return Poly::parse(s, n); }

Poly random_poly(std::mt19937_64 &rng, std::size_t n, unsigned degree)
{
    std::uniform_int_distribution<long> c(-4, 4);
    Poly p(n);
    for (const auto &m : GradedBasis(n, degree).monomials()) {
        p.add_term(m, Cyclotomic(c(rng)));
    }
    return p;
}

} // namespace

TEST(Poly, ParseAndPrint)
{
    EXPECT_EQ(P("x1^2 + x2^2").to_string(), "x1^2 + x2^2");
    EXPECT_EQ(P("(x1 + x2)^2").to_string(), "x1^2 + 2*x1*x2 + x2^2");
    EXPECT_EQ(P("x1^2/2 + x2^2/2").to_string(), "(1/2)*x1^2 + (1/2)*x2^2");
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_THROW(P("x3"), ParseError);
    EXPECT_THROW(P("1/x1"), ParseError);
}

TEST(Poly, ArithmeticMatchesExpansion)
{
    // (x1 + i x2)(x1 - i x2) = x1^2 + x2^2
    EXPECT_EQ(P("(x1 + i*x2)*(x1 - i*x2)"), P("x1^2 + x2^2"));
    EXPECT_EQ(P("(x1 - x2)^3"), P("x1^3 - 3*x1^2*x2 + 3*x1*x2^2 - x2^3"));
    EXPECT_EQ(P("x1^3*x2").derivative(0), P("3*x1^2*x2"));
    EXPECT_EQ(P("x1^2 + x1*x2").evaluate({Cyclotomic(2), Cyclotomic(3)}), Cyclotomic(10));
}

TEST(GradedBasis, SizesAreBinomial)
{
    EXPECT_EQ(GradedBasis(3, 4).size(), 15u); // C(6, 2)
    EXPECT_EQ(GradedBasis(2, 7).size(), 8u);
    EXPECT_EQ(binomial(10, 3), Integer(120));
    const GradedBasis b(3, 2);
    const Poly p = P("x1^2 - 2*x2*x3", 3);
    EXPECT_EQ(b.polynomial(b.coordinates(p)), p);
}

TEST(Action, SubstitutionConvention)
{
    // (k f)(x) = f(k^{-1} x); for the swap both conventions agree, for a
    // rotation by 90 degrees x1 -> x2 and x2 -> -x1 under k^{-1}.
    RMatrix r(2, 2);
    r(0, 1) = -1;
    r(1, 0) = 1;
    EXPECT_EQ(act(r, P("x1")), P("x2"));
    EXPECT_EQ(act(r, P("x2")), P("-x1"));
    EXPECT_EQ(act(r, P("x1^2 + x2^2")), P("x1^2 + x2^2"));
}

TEST(Action, HomomorphismOnRandomPolys)
{
    const ReflectionGroup g = builtin("dihedral:5");
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        const Poly f = random_poly(rng, 2, 3);
        const std::size_t a = t % g.order();
        const std::size_t b = (3 * t + 1) % g.order();
        EXPECT_EQ(act(g.element(g.multiply(a, b)), f), act(g.element(a), act(g.element(b), f)));
    }
}

TEST(Reynolds, ProjectsOntoInvariants)
{
    const ReflectionGroup g = builtin("dihedral:4");
    EXPECT_EQ(reynolds(g, P("x1^2")), P("x1^2/2 + x2^2/2"));
    EXPECT_TRUE(reynolds(g, P("x1")).is_zero());
    std::mt19937_64 rng(1);
    for (int t = 0; t < 5; ++t) {
        const Poly r = reynolds(g, random_poly(rng, 2, 4));
        EXPECT_EQ(reynolds(g, r), r);
        for (const auto &k : g.elements()) {
            EXPECT_EQ(act(k, r), r);
        }
    }
}

TEST(InvariantSubspace, DihedralFourDimensions)
{
    const ReflectionGroup g = builtin("dihedral:4");
    const std::vector<std::size_t> expected = {1, 0, 1, 0, 2, 0, 2, 0, 3};
    for (unsigned k = 0; k < expected.size(); ++k) {
        EXPECT_EQ(invariant_subspace(g, k).size(), expected[k]) << "degree " << k;
    }
}

TEST(DiffApply, ConstantCoefficientOperator)
{
    // (d1^2 + d2^2)(x1^2 + x2^2) = 2 + 2
    EXPECT_EQ(diff_apply(P("x1^2 + x2^2"), P("x1^2 + x2^2")), P("4"));
    EXPECT_EQ(diff_apply(P("x1"), P("x1^3*x2")), P("3*x1^2*x2"));
    EXPECT_EQ(diff_apply(P("x1*x2"), P("x1^2*x2^2")), P("4*x1*x2"));
    EXPECT_TRUE(diff_apply(P("x2^2"), P("x1^5")).is_zero());
}

TEST(DiffApply, AgreesWithIteratedDerivatives)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        const Poly f = random_poly(rng, 3, 4);
        const Poly viaSymbol = diff_apply(P("x1*x3^2", 3), f);
        EXPECT_EQ(viaSymbol, f.derivative(0).derivative(2).derivative(2));
    }
}

TEST(Jacobian, DeterminantAndIndependence)
{
    const std::vector<Poly> j = {P("x1^2 + x2^2"), P("x1^3 - 3*x1*x2^2")};
    // 2x1*(-6x1x2) - 2x2*(3x1^2 - 3x2^2)
    EXPECT_EQ(jacobian_determinant(j), P("-18*x1^2*x2 + 6*x2^3"));
    EXPECT_TRUE(jacobian_independent(j));
    EXPECT_FALSE(jacobian_independent({P("x1^2 + x2^2"), P("(x1^2 + x2^2)^2")}));
}
