#include "oracles.hpp"

#include <sigfour/errors.hpp>
#include <sigfour/hypergeom.hpp>
#include <sigfour/realline.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace sigfour;

TEST(Modulus, Accessors)
{
    const modulus m(.6);
    EXPECT_DOUBLE_EQ(m.kappa(), .6);
    EXPECT_NEAR(m.lambda(), .8, 1e-15);
    EXPECT_NEAR(m.alpha(), std::asin(.6), 1e-15);
    EXPECT_NEAR(m.complementary().kappa(), .8, 1e-15);
}

TEST(Modulus, RejectsOutOfRange)
{
    for (const double k : {0., 1., -.2, 1.5, std::nan("")}) {
        EXPECT_THROW(modulus{k}, domain_error) << k;
    }
    try {
        modulus{1.5};
        FAIL();
    } catch (const domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("(0, 1)"), std::string::npos);
    }
}

TEST(FHalf, AtZero)
{
    EXPECT_EQ(f_half(0.), 1.);
}

TEST(FHalf, ClosedFormAtPointSixSquared)
{
    EXPECT_NEAR(f_half(.36), .5 * (1. / std::sqrt(1.6) + 1. / std::sqrt(.4)), 1e-15);
}

TEST(FHalf, SineSquaredIdentity)
{
    const double p = std::numbers::pi / 6.;
    EXPECT_NEAR(f_half(.25), std::cos(p / 2.) / std::cos(p), 1e-15);
}

TEST(FHalf, MatchesSeriesOracle)
{
    EXPECT_NEAR(f_half(.49), static_cast<double>(oracle::hyp2f1(.25L, .75L, .5L, .49L)), 1e-12);
    EXPECT_NEAR(f_half(.49), oracle::frozen::f_half_049, 1e-14);
}

TEST(FHalf, DomainErrors)
{
    EXPECT_THROW(f_half(-.1), domain_error);
    EXPECT_THROW(f_half(1.), domain_error);
    EXPECT_THROW(f_half_series(1.), domain_error);
}

TEST(FOne, AtZero)
{
    EXPECT_EQ(f_one(0.), 1.);
}

TEST(FOne, MatchesSeriesOracle)
{
    EXPECT_NEAR(f_one(.25), static_cast<double>(oracle::hyp2f1(.25L, .75L, 1.L, .25L)), 1e-14);
    EXPECT_NEAR(f_one(.25), oracle::frozen::f_one_025, 1e-14);
    EXPECT_NEAR(f_one(.99), static_cast<double>(oracle::hyp2f1(.25L, .75L, 1.L, .99L)), 1e-12);
}

TEST(FOne, Errors)
{
    EXPECT_THROW(f_one(-.1), domain_error);
    EXPECT_THROW(f_one(1.), domain_error);
    EXPECT_THROW(f_one(.9995), slow_convergence);
    EXPECT_NO_THROW(f_one(f_one_max_argument));
}

TEST(CompleteK, SmallModulusLimit)
{
    EXPECT_NEAR(complete_K(modulus(1e-6)), std::numbers::pi / 2., 1e-12);
}

TEST(CompleteK, FrozenValues)
{
    EXPECT_NEAR(complete_K(modulus(.3)), oracle::frozen::K_03, 1e-14);
    EXPECT_NEAR(complete_K(modulus(.5)), oracle::frozen::K_05, 1e-14);
    EXPECT_NEAR(complete_K(modulus(.8)), oracle::frozen::K_08, 1e-14);
}

TEST(CompleteK, QuadratureOracle)
{
    const double k2 = .64;
    const double I = oracle::gauss_legendre(
        [k2](double t) {
            const double z = std::sqrt(k2) * std::sin(t);
            return .5 * (1. / std::sqrt(1. + z) + 1. / std::sqrt(1. - z));
        },
        0., std::numbers::pi / 2.);
    EXPECT_NEAR(complete_K(modulus(.8)), I, 1e-11);
}

TEST(CompleteK, AgreesWithRealLineQuadrature)
{
    for (const double k : {.3, .5, .8}) {
        const modulus m(k);
        EXPECT_NEAR(complete_K(m), phi_integral(std::numbers::pi / 2., m), 1e-11) << k;
    }
}
