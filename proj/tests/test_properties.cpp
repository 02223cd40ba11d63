// Randomized invariants. Each generator is seeded, so failures reproduce.
#include "oracles.hpp"

#include <sigfour/hypergeom.hpp>
#include <sigfour/numerics.hpp>
#include <sigfour/realline.hpp>
#include <sigfour/sig4.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace sigfour;

namespace
{

constexpr int trials = 60;

class gen
{
public:
    explicit gen(std::uint64_t seed) : m_rng(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(m_rng);
    }

    double kappa()
    {
        return uniform(.05, .95);
    }

    // A point of the rn cell at least 0.1 * 2 Omega from every half-period congruent.
    complex cell_point(const sig4_context &c)
    {
        const double om = c.Omega(), omp = c.Omega_prime().imag();
        for (;;) {
            const complex z(uniform(0., 2. * om), uniform(0., 2. * omp));
            const complex n(std::round(z.real() / om) * om, std::round(z.imag() / omp) * omp);
            if (std::abs(z - n) > .2 * om) {
                return z;
            }
        }
    }

private:
    std::mt19937_64 m_rng;
};

double rel(complex a, complex b)
{
    return std::abs(a - b) / (1. + std::abs(b));
}

}

TEST(Property, IntegralAdditive)
{
    gen g(11);
    for (int i = 0; i < trials; ++i) {
        const double w = g.uniform(.5, 5.);
        const auto f = [w](double t) { return std::cos(w * t) + t * t; };
        const double a = g.uniform(-2., 0.), b = g.uniform(1., 3.), c = g.uniform(a, b);
        const double split = numerics::integrate_adaptive(f, a, c) + numerics::integrate_adaptive(f, c, b);
        EXPECT_LE(std::abs(split - numerics::integrate_adaptive(f, a, b)), 2e-13);
    }
}

TEST(Property, InversionRoundTrip)
{
    gen g(12);
    for (int i = 0; i < trials; ++i) {
        const double s = g.uniform(.1, 3.);
        const auto f = [s](double x) { return std::sinh(s * x) + x; };
        const auto df = [s](double x) { return s * std::cosh(s * x) + 1.; };
        const double target = g.uniform(f(0.), f(2.));
        EXPECT_LE(std::abs(f(numerics::invert_monotone(f, df, target, {0., 2.})) - target), 1e-13);
    }
}

TEST(Property, NumericsDeterministic)
{
    const auto f = [](double t) { return std::exp(std::sin(3. * t)); };
    EXPECT_EQ(numerics::integrate_adaptive(f, 0., 5.), numerics::integrate_adaptive(f, 0., 5.));
}

TEST(Property, HalfClosedFormVsSeries)
{
    gen g(13);
    for (int i = 0; i < trials; ++i) {
        const double x = g.uniform(0., .96);
        EXPECT_LE(std::abs(f_half(x) - f_half_series(x)), 1e-12) << x;
        EXPECT_LE(std::abs(f_half(x) - static_cast<double>(oracle::hyp2f1(.25L, .75L, .5L, x))), 1e-12) << x;
    }
}

TEST(Property, HalfAngleIdentity)
{
    for (int i = 0; i < 200; ++i) {
        const double p = std::numbers::pi / 2. * i / 200.;
        const double s = std::sin(p);
        EXPECT_LE(std::abs(f_half(s * s) * std::cos(p) - std::cos(p / 2.)), 1e-12) << p;
    }
}

TEST(Property, FOneAndKIncreasing)
{
    double prev = f_one(0.);
    for (int i = 1; i <= 200; ++i) {
        const double v = f_one(.99 * i / 200.);
        EXPECT_GT(v, prev);
        prev = v;
    }
    double prevK = complete_K(modulus(.005));
    for (int i = 2; i <= 199; ++i) {
        const double K = complete_K(modulus(i / 200.));
        EXPECT_GT(K, prevK);
        prevK = K;
    }
}

TEST(Property, RealLinePeriodicity)
{
    gen g(14);
    for (int i = 0; i < trials; ++i) {
        const modulus m(g.kappa());
        const double K = complete_K(m);
        const double u = g.uniform(-3. * K, 3. * K);
        const double r = sig4_real(u, m).rn;
        EXPECT_LE(std::abs(sig4_real(u + 4. * K, m).rn - r), 1e-11);
        EXPECT_LE(std::abs(sig4_real(u + 2. * K, m).rn + r), 1e-11);
    }
}

TEST(Property, RealLineTrigonometricDuplication)
{
    gen g(15);
    for (int i = 0; i < trials; ++i) {
        const modulus m(g.kappa());
        const double u = g.uniform(-6., 6.);
        const sig4_values v = sig4_real(u, m);
        EXPECT_LE(std::abs(v.dn2 - std::cos(psi(u, m))), 1e-14);
        EXPECT_LE(std::abs(v.dn2 - (1. - 2. * v.rn * v.rn)), 1e-14);
    }
}

TEST(Property, RealLineDerivative)
{
    gen g(16);
    for (int i = 0; i < trials; ++i) {
        const modulus m(g.kappa());
        const double k = m.kappa();
        const double u = g.uniform(-6., 6.), h = 1e-6;
        const sig4_values v = sig4_real(u, m);
        const double d = (sig4_real(u + h, m).rn - v.rn) / h;
        EXPECT_LE(std::abs(d - k / 2. * v.cn2), 1e-6);
        const double r2 = v.rn * v.rn;
        EXPECT_LE(std::abs(d * d - (r2 * r2 - r2 + k * k / 4.)), 1e-6);
    }
}

TEST(Property, WpPeriodicAndParity)
{
    gen g(17);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        const complex z = g.cell_point(c);
        for (const auto *w : {&c.P(), &c.p()}) {
            const auto hp = w->get_half_periods();
            const auto [v, d] = wp_both(*w, z);
            EXPECT_LE(rel(wp(*w, z + 2. * hp.omega), v), 1e-9);
            EXPECT_LE(rel(wp(*w, z + 2. * hp.omega_prime()), v), 1e-9);
            EXPECT_LE(rel(wp(*w, -z), v), 1e-10);
            EXPECT_LE(rel(wp_prime(*w, -z), -d), 1e-10);
        }
    }
}

TEST(Property, Homogeneity)
{
    gen g(18);
    const complex rot(0., std::sqrt(2.));
    for (int i = 0; i < trials; ++i) {
        const modulus m(g.kappa());
        const sig4_context c(m), cc(m.complementary());
        const complex z = g.cell_point(cc) * .5;
        EXPECT_LE(rel(wp(cc.p(), z), -2. * wp(c.P(), rot * z)), 1e-9);
        EXPECT_LE(std::abs(c.Omega() - std::sqrt(2.) * cc.omega_prime().imag()), 1e-12);
        EXPECT_LE(std::abs(c.Omega_prime().imag() - std::sqrt(2.) * cc.omega()), 1e-12);
    }
}

TEST(Property, MidpointsMatchRoots)
{
    gen g(19);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        for (const auto *w : {&c.P(), &c.p()}) {
            const auto hp = w->get_half_periods();
            const auto &e = w->roots();
            EXPECT_LE(std::abs(wp(*w, hp.omega) - e[0]), 1e-10);
            EXPECT_LE(std::abs(wp(*w, hp.omega + hp.omega_prime()) - e[1]), 1e-10);
            EXPECT_LE(std::abs(wp(*w, hp.omega_prime()) - e[2]), 1e-10);
        }
    }
}

TEST(Property, RnCoperiodicOddAntiperiodic)
{
    gen g(20);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        const complex z = g.cell_point(c);
        const complex r = rn(c, z);
        EXPECT_LE(rel(rn(c, z + 2. * c.Omega()), r), 1e-9);
        EXPECT_LE(rel(rn(c, z + 2. * c.Omega_prime()), r), 1e-9);
        EXPECT_LE(rel(rn(c, -z), -r), 1e-10);
        EXPECT_LE(rel(rn(c, z + c.Omega()), -r), 1e-9);
        EXPECT_LE(rel(cn2(c, z + c.Omega()), -cn2(c, z)), 1e-9);
    }
    const sig4_context c{modulus(.5)};
    const complex probe(.3, .1);
    EXPECT_GT(std::abs(rn(c, probe + c.Omega()) - rn(c, probe)), .01);
}

TEST(Property, SecondOrderEquation)
{
    gen g(21);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        const complex z = g.cell_point(c);
        const complex r = rn(c, z);
        const complex d2 = oracle::d2([&](complex w) { return rn(c, w); }, z);
        EXPECT_LE(rel(d2, 2. * r * r * r - r), 1e-5);
    }
}

TEST(Property, Dn2FundamentalPeriods)
{
    gen g(22);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        const complex z = g.cell_point(c);
        EXPECT_LE(rel(dn2(c, z + c.Omega()), dn2(c, z)), 1e-9);
        EXPECT_LE(rel(dn2(c, z + 2. * c.Omega_prime()), dn2(c, z)), 1e-9);
    }
    for (const double k : {.3, .5, .8}) {
        const sig4_context c{modulus(k)};
        const complex probe(.3, .1);
        EXPECT_GT(std::abs(dn2(c, probe + c.Omega_prime()) - dn2(c, probe)), .01) << k;
    }
}

TEST(Property, ChebyshevResidual)
{
    gen g(23);
    for (int i = 0; i < trials; ++i) {
        const sig4_context c{modulus(g.kappa())};
        const complex w = g.cell_point(c);
        const complex y = rn(c, w);
        EXPECT_LE(chebyshev_residual(c, w / std::sqrt(8.)) / (1. + 8. * std::norm(y) * std::norm(y)), 1e-8);
    }
}

TEST(Property, QuarticTranslationInvariance)
{
    gen g(24);
    for (int i = 0; i < trials; ++i) {
        const quartic_coefficients q{g.uniform(-2., 2.), g.uniform(-1., 1.), g.uniform(-1., 1.), g.uniform(-1., 1.),
                                     g.uniform(-1., 1.)};
        const double t = g.uniform(-1., 1.);
        const invariants a = quartic_invariants(q), b = quartic_invariants(q.translated(t));
        EXPECT_LE(std::abs(a.g2 - b.g2), 1e-13);
        EXPECT_LE(std::abs(a.g3 - b.g3), 1e-13);
    }
}
