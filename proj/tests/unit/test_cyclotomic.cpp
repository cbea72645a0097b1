#include <gtest/gtest.h>

#include <random>

#include <mpfr.h>

#include "reflinv/cyclotomic.hpp"
#include "reflinv/error.hpp"
#include "reflinv/numeric.hpp"

using namespace reflinv;

namespace {

// cos(2 pi k / n) straight from MPFR, independent of the cyclotomic embedding.
double mpfr_cos_2pi(long k, long n)
{
    mpfr_t x;
    mpfr_init2(x, 200);
    mpfr_const_pi(x, MPFR_RNDN);
    mpfr_mul_si(x, x, 2 * k, MPFR_RNDN);
    mpfr_div_si(x, x, n, MPFR_RNDN);
    mpfr_cos(x, x, MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

Cyclotomic random_element(std::mt19937_64 &rng, unsigned m)
{
    std::uniform_int_distribution<long> c(-6, 6);
    std::uniform_int_distribution<long> d(1, 5);
    Cyclotomic a;
    for (unsigned k = 0; k < m; ++k) {
        a += Cyclotomic::zeta(m, k) * Cyclotomic(Rational(c(rng), d(rng)));
    }
    return a;
}

} // namespace

TEST(Cyclotomic, ImaginaryUnitSquaresToMinusOne)
{
    const Cyclotomic i = Cyclotomic::zeta(4);
    EXPECT_EQ(i * i, Cyclotomic(-1));
    EXPECT_TRUE((i * i).is_rational());
}

TEST(Cyclotomic, CosineSumOfFifthRoots)
{
    const Cyclotomic half(Rational(1, 2));
    const Cyclotomic c1 = (Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4)) * half;
    const Cyclotomic c2 = (Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3)) * half;
    EXPECT_EQ(c1 + c2, Cyclotomic(Rational(-1, 2)));
    EXPECT_EQ(c1, Cyclotomic::cos_2pi(5, 1));
}

TEST(Cyclotomic, ConjugationPermutesRoots)
{
    EXPECT_EQ(Cyclotomic::zeta(3).conj(), Cyclotomic::zeta(3, 2));
    EXPECT_TRUE(Cyclotomic::cos_2pi(7, 2).is_real());
    EXPECT_TRUE(Cyclotomic::zeta(4).is_imaginary());
    EXPECT_FALSE(Cyclotomic::zeta(3).is_real());
}

TEST(Cyclotomic, CommonOrderPromotion)
{
    // zeta_4 * zeta_3 = zeta_12^7
    EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(3), Cyclotomic::zeta(12, 7));
    EXPECT_EQ((Cyclotomic::zeta(6) - Cyclotomic::zeta(6)).minimized().order(), 1u);
}

TEST(Cyclotomic, MinimizedOrderOfRealSubfieldElements)
{
    EXPECT_EQ(Cyclotomic::cos_2pi(6, 1), Cyclotomic(Rational(1, 2)));
    EXPECT_EQ(Cyclotomic::cos_2pi(8, 1).minimized().order(), 8u);
    EXPECT_EQ(Cyclotomic::zeta(10, 2).minimized(), Cyclotomic::zeta(5, 1));
}

TEST(Cyclotomic, DivisionByZeroThrows)
{
    EXPECT_THROW(Cyclotomic(1) / Cyclotomic(), DivisionByZero);
    EXPECT_THROW(Cyclotomic().inverse(), DivisionByZero);
}

TEST(Cyclotomic, OrderCapIsEnforced)
{
    const unsigned saved = cyclotomic_order_cap();
    set_cyclotomic_order_cap(60);
    EXPECT_THROW(Cyclotomic::zeta(7) * Cyclotomic::zeta(11), OrderOverflow);
    set_cyclotomic_order_cap(saved);
    EXPECT_NO_THROW(Cyclotomic::zeta(7) * Cyclotomic::zeta(11));
}

TEST(Cyclotomic, ParserRoundTrip)
{
    EXPECT_EQ(Cyclotomic::parse("E(4)^2"), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::parse("i*i"), Cyclotomic(-1));
    EXPECT_EQ(Cyclotomic::parse("(E(5)+E(5)^4)/2"), Cyclotomic::cos_2pi(5, 1));
    EXPECT_EQ(Cyclotomic::parse("-3/6"), Cyclotomic(Rational(-1, 2)));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const Cyclotomic a = random_element(rng, 12);
        EXPECT_EQ(Cyclotomic::parse(a.to_string()), a) << a.to_string();
    }
}

TEST(Cyclotomic, ParserReportsColumns)
{
    try {
        Cyclotomic::parse("1 + E(0)");
        FAIL() << "E(0) accepted";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.column(), 7u);
    }
    EXPECT_THROW(Cyclotomic::parse("1 +"), ParseError);
    EXPECT_THROW(Cyclotomic::parse("(1"), ParseError);
    EXPECT_THROW(Cyclotomic::parse("x"), ParseError);
    EXPECT_THROW(Cyclotomic::parse("1/0"), Error);
}

TEST(CyclotomicProperty, FieldAxiomsOnRandomElements)
{
    std::mt19937_64 rng(11);
    for (unsigned m : {5u, 8u, 12u, 15u}) {
        for (int t = 0; t < 25; ++t) {
            const Cyclotomic a = random_element(rng, m);
            const Cyclotomic b = random_element(rng, m);
            const Cyclotomic c = random_element(rng, 4);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a.conj().conj(), a);
            EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_EQ((b / a) * a, b);
            }
        }
    }
}

TEST(Embedding, MatchesIndependentEvaluation)
{
    const Complex i = embed_complex(Cyclotomic::zeta(4), 64);
    EXPECT_NEAR(i.re.convert_to<double>(), 0.0, 1e-15);
    EXPECT_NEAR(i.im.convert_to<double>(), 1.0, 1e-15);
    const Complex h = embed_complex(Cyclotomic::cos_2pi(6, 1), 64);
    EXPECT_NEAR(h.re.convert_to<double>(), 0.5, 1e-15);
    for (long n : {5L, 7L, 9L, 16L}) {
        for (long k = 1; k < n; ++k) {
            const Complex c = embed_complex(Cyclotomic::cos_2pi(static_cast<unsigned>(n), k), 128);
            EXPECT_NEAR(c.re.convert_to<double>(), mpfr_cos_2pi(k, n), 1e-15);
            EXPECT_NEAR(c.im.convert_to<double>(), 0.0, 1e-15);
        }
    }
}

TEST(Embedding, ErrorBelowPrecisionBound)
{
    // cos(2 pi / 5) = (sqrt 5 - 1) / 4
    PrecisionScope scope(300);
    const Real expected = (sqrt(Real(5)) - 1) / 4;
    const Complex c = embed_complex(Cyclotomic::cos_2pi(5, 1), 256);
    EXPECT_LT(abs(c.re - expected), ldexp(Real(1), -252));
}
