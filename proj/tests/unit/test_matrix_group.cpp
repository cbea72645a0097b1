#include <gtest/gtest.h>

#include <random>

#include "reflinv/error.hpp"
#include "reflinv/group_io.hpp"
#include "reflinv/matrix_group.hpp"

using namespace reflinv;

namespace {

unsigned long factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(Builtin, DihedralOrdersAndReflections)
{
    for (unsigned n = 3; n <= 8; ++n) {
        const ReflectionGroup g = builtin("dihedral:" + std::to_string(n));
        EXPECT_EQ(g.order(), 2 * n);
        EXPECT_EQ(g.reflection_count(), n);
        EXPECT_TRUE(is_pseudo_reflection_group(g));
    }
}

TEST(Builtin, SymmetricAndHyperoctahedral)
{
    for (unsigned n = 2; n <= 4; ++n) {
        const ReflectionGroup s = builtin("symmetric:" + std::to_string(n));
        EXPECT_EQ(s.order(), factorial(n));
        EXPECT_EQ(s.reflection_count(), n * (n - 1) / 2); // transpositions
    }
    for (unsigned n = 2; n <= 3; ++n) {
        const ReflectionGroup b = builtin("hyperoctahedral:" + std::to_string(n));
        EXPECT_EQ(b.order(), (1ul << n) * factorial(n));
        EXPECT_EQ(b.reflection_count(), n * n); // n sign changes, n(n-1) root reflections
    }
}

TEST(Builtin, CyclicIsNotAReflectionGroup)
{
    for (unsigned n = 3; n <= 8; ++n) {
        const ReflectionGroup g = builtin("cyclic:" + std::to_string(n));
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(g.reflection_count(), 0u);
        EXPECT_FALSE(is_pseudo_reflection_group(g));
    }
}

TEST(Builtin, RejectsUnknownSpecs)
{
    EXPECT_THROW(builtin("dihedral:x"), InvalidArgument);
    EXPECT_THROW(builtin("dihedral:1"), InvalidArgument);
    EXPECT_THROW(builtin("klein"), InvalidArgument);
}

TEST(PseudoReflection, Predicate)
{
    RMatrix s = RMatrix::identity(3);
    s(0, 0) = -1;
    EXPECT_TRUE(is_pseudo_reflection(s));
    s(1, 1) = -1;
    EXPECT_FALSE(is_pseudo_reflection(s));
    EXPECT_FALSE(is_pseudo_reflection(RMatrix::identity(2)));
    RMatrix complex_reflection = RMatrix::identity(2);
    complex_reflection(1, 1) = Cyclotomic::zeta(3);
    EXPECT_TRUE(is_pseudo_reflection(complex_reflection));
    EXPECT_FALSE(is_orthogonal(complex_reflection));
}

TEST(Closure, InfiniteGroupIsDetected)
{
    RMatrix shear = RMatrix::identity(2);
    shear(0, 1) = 1;
    EXPECT_THROW(closure({shear}, 500), GroupNotFinite);
}

TEST(Closure, TableIsAssociativeWithInverses)
{
    const ReflectionGroup g = builtin("dihedral:5");
    for (std::size_t a = 0; a < g.order(); ++a) {
        EXPECT_EQ(g.multiply(a, g.inverse(a)), 0u);
        for (std::size_t b = 0; b < g.order(); ++b) {
            EXPECT_EQ(g.element(g.multiply(a, b)), g.element(a) * g.element(b));
        }
    }
}

TEST(SemidirectProduct, GroupLaws)
{
    const ReflectionGroup g = builtin("hyperoctahedral:2");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const GroupElement a = random_element(g, rng);
        const GroupElement b = random_element(g, rng);
        const GroupElement c = random_element(g, rng);
        EXPECT_EQ(g_multiply(g, g_multiply(g, a, b), c), g_multiply(g, a, g_multiply(g, b, c)));
        EXPECT_EQ(g_multiply(g, a, g_inverse(g, a)), g_identity(g));
    }
    // (x1, k1)(x2, k2) = (x1 + k1 x2, k1 k2), checked by hand for a sign flip.
    const GroupElement a{{Cyclotomic(1), Cyclotomic(2)}, 0};
    GroupElement b{{Cyclotomic(3), Cyclotomic(4)}, 0};
    for (std::size_t k = 0; k < g.order(); ++k) {
        RMatrix flip = RMatrix::identity(2);
        flip(0, 0) = -1;
        if (g.element(k) == flip) {
            const GroupElement r = g_multiply(g, {a.translation, k}, b);
            EXPECT_EQ(r.translation, (Vector{Cyclotomic(-2), Cyclotomic(6)}));
        }
    }
}

TEST(GroupFile, ParsesExplicitGenerators)
{
    const std::string text = R"json({"name": "D3", "dimension": 2, "cyclotomic_order": 12,
  "generators": [
    [["(E(3)+E(3)^2)/2", "-(E(12)^4-E(12)^8)/(2*E(4))"], ["(E(12)^4-E(12)^8)/(2*E(4))", "(E(3)+E(3)^2)/2"]],
    [[1, 0], [0, -1]]
  ]})json";
    const ReflectionGroup g = parse_group_json(text);
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.reflection_count(), 3u);
    EXPECT_EQ(g.name(), "D3");
}

TEST(GroupFile, BuiltinForm)
{
    EXPECT_EQ(parse_group_json(R"({"builtin": "symmetric:3"})").order(), 6u);
}

TEST(GroupFile, ErrorsCarryLineAndColumn)
{
    const std::string bad_entry = "{\"dimension\": 2,\n \"generators\": [[[\"E(0)\", 0], [0, 1]]]}";
    try {
        parse_group_json(bad_entry);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 22u);
    }
    const std::string bad_json = "{\"dimension\": 2,\n  \"generators\": [,]}";
    try {
        parse_group_json(bad_json);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 18u);
    }
    EXPECT_THROW(parse_group_json(R"({"dimension": 2, "generators": [[[1, 0]]]})"), ParseError);
    EXPECT_THROW(parse_group_json(R"json({"dimension": 2, "cyclotomic_order": 4, "generators": [[["E(3)", 0], [0, 1]]]})json"),
                 ParseError);
}
