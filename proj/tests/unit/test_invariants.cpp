#include <gtest/gtest.h>

#include "reflinv/invariants.hpp"
#include "reflinv/matrix_group.hpp"
#include "reflinv/molien.hpp"

using namespace reflinv;

TEST(WeightedMonomials, Counts)
{
    // 2a + 3b = 12: (6,0), (3,2), (0,4)
    EXPECT_EQ(weighted_monomials({2, 3}, 12).size(), 3u);
    EXPECT_EQ(weighted_monomials({2, 3}, 1).size(), 0u);
}

TEST(FundamentalInvariants, DihedralThree)
{
    const FundamentalInvariants f = find_fundamental_invariants(builtin("dihedral:3"));
    ASSERT_EQ(f.degrees, (std::vector<unsigned>{2, 3}));
    EXPECT_EQ(f.generators[0], Poly::parse("x1^2 + x2^2", 2));
    EXPECT_EQ(f.generators[1], Poly::parse("x1^3 - 3*x1*x2^2", 2));
}

TEST(FundamentalInvariants, SymmetricGroupMatchesPowerSums)
{
    const FundamentalInvariants f = find_fundamental_invariants(builtin("symmetric:3"));
    ASSERT_EQ(f.degrees, (std::vector<unsigned>{1, 2, 3}));
    const std::vector<Poly> power_sums = {Poly::parse("x1 + x2 + x3", 3), Poly::parse("x1^2 + x2^2 + x3^2", 3),
                                          Poly::parse("x1^3 + x2^3 + x3^3", 3)};
    for (const auto &p : power_sums) {
        EXPECT_TRUE(in_subalgebra(f.generators, p));
    }
    for (const auto &g : f.generators) {
        EXPECT_TRUE(in_subalgebra(power_sums, g));
    }
}

TEST(FundamentalInvariants, SubalgebraDimensionsMatchMolien)
{
    for (const std::string spec : {"dihedral:5", "hyperoctahedral:3", "symmetric:4"}) {
        const ReflectionGroup g = builtin(spec);
        const FundamentalInvariants f = find_fundamental_invariants(g);
        const auto series = molien(g, 12).to_integers();
        for (unsigned k = 0; k <= 12; ++k) {
            EXPECT_EQ(static_cast<long>(subalgebra_dimension(f.generators, k)), series[k]) << spec << " k=" << k;
        }
    }
}

TEST(Harmonics, DihedralProfile)
{
    for (unsigned n = 3; n <= 8; ++n) {
        const ReflectionGroup g = builtin("dihedral:" + std::to_string(n));
        const HarmonicSpace h = compute_harmonics(g, find_fundamental_invariants(g));
        std::vector<std::size_t> expected(n + 1, 2);
        expected.front() = expected.back() = 1;
        EXPECT_EQ(h.dims(), expected);
        EXPECT_EQ(h.total_dimension, 2 * n);
    }
}

TEST(Harmonics, AnnihilatedByInvariantOperators)
{
    const ReflectionGroup g = builtin("hyperoctahedral:2");
    const FundamentalInvariants f = find_fundamental_invariants(g);
    const HarmonicSpace h = compute_harmonics(g, f);
    for (const auto &p : h.flattened()) {
        for (const auto &j : f.generators) {
            EXPECT_TRUE(diff_apply(j, p).is_zero());
        }
    }
    EXPECT_EQ(h.total_dimension, g.order());
}

TEST(Harmonics, SymmetricFourProfile)
{
    const ReflectionGroup g = builtin("symmetric:4");
    const HarmonicSpace h = compute_harmonics(g, find_fundamental_invariants(g));
    EXPECT_EQ(h.dims(), (std::vector<std::size_t>{1, 3, 5, 6, 5, 3, 1}));
}

TEST(ProductDecomposition, SpansPolynomialRing)
{
    for (const std::string spec : {"dihedral:4", "symmetric:3"}) {
        const ReflectionGroup g = builtin(spec);
        const FundamentalInvariants f = find_fundamental_invariants(g);
        const auto result = verify_product_decomposition(g, f, compute_harmonics(g, f), 7);
        EXPECT_TRUE(result.ok) << spec;
        EXPECT_EQ(result.checked_up_to, 7u);
    }
}
