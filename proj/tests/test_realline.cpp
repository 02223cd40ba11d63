#include "oracles.hpp"

#include <sigfour/hypergeom.hpp>
#include <sigfour/realline.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sigfour;

namespace
{

// phi by Gauss-Legendre quadrature and pure bisection.
double phi_oracle(double u, double kappa)
{
    const double k2 = kappa * kappa;
    const auto g = [k2](double T) {
        return oracle::gauss_legendre(
            [k2](double t) {
                const double z = std::sqrt(k2) * std::sin(t);
                return .5 * (1. / std::sqrt(1. + z) + 1. / std::sqrt(1. - z));
            },
            0., T, 400);
    };
    return oracle::bisect(g, u, 0., 4.);
}

}

TEST(Phi, Origin)
{
    for (const double k : {.1, .5, .9}) {
        EXPECT_EQ(phi(0., modulus(k)), 0.);
    }
}

TEST(Phi, QuarterPeriod)
{
    const modulus m(.5);
    EXPECT_NEAR(phi(complete_K(m), m), std::numbers::pi / 2., 1e-12);
}

TEST(Phi, HalfPeriodShift)
{
    const modulus m(.5);
    const double K = complete_K(m);
    EXPECT_NEAR(phi(.3 + 2. * K, m), phi(.3, m) + std::numbers::pi, 1e-11);
}

TEST(Phi, Oracle)
{
    const modulus m(.8);
    EXPECT_NEAR(phi(.5, m), phi_oracle(.5, .8), 1e-12);
    EXPECT_NEAR(phi(.5, m), oracle::frozen::phi_05_k08, 1e-13);
}

TEST(Phi, Odd)
{
    const modulus m(.7);
    for (const double u : {.1, 1.3, 4.4, 9.}) {
        EXPECT_NEAR(phi(-u, m), -phi(u, m), 1e-13);
    }
}

TEST(Psi, OriginAndQuarterPeriod)
{
    const modulus m(.5);
    EXPECT_EQ(psi(0., m), 0.);
    EXPECT_NEAR(psi(complete_K(m), m), m.alpha(), 1e-12);
}

TEST(Sig4Real, Origin)
{
    const sig4_values v = sig4_real(0., modulus(.5));
    EXPECT_EQ(v.sn2, 0.);
    EXPECT_EQ(v.cn2, 1.);
    EXPECT_EQ(v.dn2, 1.);
    EXPECT_EQ(v.rn, 0.);
}

TEST(Sig4Real, QuarterPeriod)
{
    const modulus m(.5);
    const sig4_values v = sig4_real(complete_K(m), m);
    EXPECT_NEAR(v.sn2, 1., 1e-12);
    EXPECT_NEAR(v.cn2, 0., 1e-12);
    EXPECT_NEAR(v.dn2, m.lambda(), 1e-12);
    EXPECT_NEAR(v.rn, std::sin(m.alpha() / 2.), 1e-12);
}

TEST(Sig4Real, FrozenRn)
{
    EXPECT_NEAR(sig4_real(.7, modulus(.8)).rn, oracle::frozen::rn_07_k08, 1e-13);
}
