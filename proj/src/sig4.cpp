#include <sigfour/errors.hpp>
#include <sigfour/sig4.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace sigfour
{

sig4_context::sig4_context(const modulus &m) : m_modulus(m), m_P(context_P(m)), m_p(context_p(m)) {}

namespace
{

constexpr double congruence_tol = 1e-9;

// Nearest point of the half-lattice {m Omega + n Omega'} of rn.
complex nearest_half_lattice_point(const sig4_context &ctx, complex z)
{
    const double om = ctx.Omega(), omp = ctx.Omega_prime().imag();
    return {std::round(z.real() / om) * om, std::round(z.imag() / omp) * omp};
}

[[noreturn]] void throw_pole(const char *fn, complex pole)
{
    std::ostringstream os;
    os.precision(17);
    os << fn << ": pole at " << pole.real() << (pole.imag() < 0. ? " - " : " + ") << std::abs(pole.imag()) << "i";
    throw pole_error(os.str(), pole);
}

void guard_quotient(const sig4_context &ctx, const char *fn, complex num, complex den, complex z)
{
    if (std::abs(den) < 1e-12 * (1. + std::abs(num))) {
        throw_pole(fn, nearest_half_lattice_point(ctx, z));
    }
}

// Taylor expansions of rn and rn' at a lattice point of P, where the quotient
// is 0 * infinity. rn(d) = (kappa/2)(d - d^3/6) + O(d^5).
complex rn_near_lattice(double kappa, complex d)
{
    return kappa / 2. * d * (1. - d * d / 6.);
}

complex rn_prime_near_lattice(double kappa, complex d)
{
    return kappa / 2. * (1. - d * d / 2.);
}

}

complex rn(const sig4_context &ctx, complex z)
{
    const double k = ctx.get_modulus().kappa();
    const auto [lp, d] = ctx.P().reduce(z);
    if (std::abs(d) < pole_guard) {
        return rn_near_lattice(k, d);
    }
    const auto [P, dP] = ctx.P().evaluate(z);
    const complex c = 1. / 12. + P;
    const complex num = k / 4. * dP;
    const complex den = k * k / 16. - c * c;
    guard_quotient(ctx, "rn", num, den, z);
    return num / den;
}

complex rn_prime(const sig4_context &ctx, complex z)
{
    const double k = ctx.get_modulus().kappa();
    const auto [lp, d] = ctx.P().reduce(z);
    if (std::abs(d) < pole_guard) {
        return rn_prime_near_lattice(k, d);
    }
    const auto [P, dP] = ctx.P().evaluate(z);
    const double G2 = ctx.P().get_invariants().g2;
    const complex c = 1. / 12. + P;
    const complex num = k / 4. * dP;
    const complex dnum = k / 4. * (6. * P * P - G2 / 2.);
    const complex den = k * k / 16. - c * c;
    const complex dden = -2. * c * dP;
    guard_quotient(ctx, "rn_prime", num, den, z);
    return (dnum * den - num * dden) / (den * den);
}

complex rn_squared(const sig4_context &ctx, complex z)
{
    const double k = ctx.get_modulus().kappa();
    const auto [lp, d] = ctx.P().reduce(z);
    if (std::abs(d) < pole_guard) {
        const complex r = rn_near_lattice(k, d);
        return r * r;
    }
    const complex P = wp(ctx.P(), z);
    const complex c = P + 1. / 12.;
    const complex num = k * k / 4. * (P - 1. / 6.);
    const complex den = c * c - k * k / 16.;
    guard_quotient(ctx, "rn_squared", num, den, z);
    return num / den;
}

complex dn2(const sig4_context &ctx, complex z, dn2_path path)
{
    const double k2 = ctx.get_modulus().kappa() * ctx.get_modulus().kappa();
    if (path == dn2_path::via_rn) {
        const complex r = rn(ctx, z);
        return 1. - 2. * r * r;
    }

    const auto [lp, d] = ctx.p().reduce(z);
    if (std::abs(d) < pole_guard) {
        // p = 1/d^2 + O(d^2) there.
        const complex d2 = d * d;
        return 1. - k2 / 2. * d2 / (1. + d2 / 3.);
    }
    const complex den = 1. / 3. + wp(ctx.p(), z);
    guard_quotient(ctx, "dn2", k2 / 2., den, z);
    return 1. - k2 / 2. / den;
}

complex cn2(const sig4_context &ctx, complex z)
{
    return 2. / ctx.get_modulus().kappa() * rn_prime(ctx, z);
}

complex sn2_squared(const sig4_context &ctx, complex z)
{
    const double k = ctx.get_modulus().kappa();
    const complex r = rn(ctx, z);
    const complex r2 = r * r;
    return 4. / (k * k) * r2 * (1. - r2);
}

complex shift_value(const sig4_context &ctx, complex z, half_period_shift shift)
{
    if (shift == half_period_shift::omega) {
        return -rn(ctx, z);
    }
    const auto [P, dP] = ctx.P().evaluate(z);
    complex den = P - 1. / 6.;
    if (shift == half_period_shift::omega_prime) {
        den = -den;
    }
    const complex num = dP / 2.;
    if (std::abs(den) < 1e-12 * (1. + std::abs(num))) {
        const complex s = (shift == half_period_shift::omega_prime) ? ctx.Omega_prime()
                                                                    : ctx.Omega() + ctx.Omega_prime();
        throw_pole("shift_value", nearest_half_lattice_point(ctx, z + s));
    }
    return num / den;
}

point_class classify(const sig4_context &ctx, complex z)
{
    const double om = ctx.Omega(), omp = ctx.Omega_prime().imag();
    const double m = std::round(z.real() / om), n = std::round(z.imag() / omp);
    const complex d = z - complex(m * om, n * omp);
    if (std::abs(d) > congruence_tol) {
        return {point_kind::regular, 0, special_point::none};
    }
    const bool odd_m = std::fmod(std::abs(m), 2.) == 1.;
    const bool odd_n = std::fmod(std::abs(n), 2.) == 1.;
    if (!odd_n) {
        return {point_kind::zero, 1, odd_m ? special_point::omega : special_point::origin};
    }
    return {point_kind::pole, 1, odd_m ? special_point::omega_plus_omega_prime : special_point::omega_prime};
}

complex chebyshev_t4(complex y)
{
    const complex y2 = y * y;
    return 8. * y2 * y2 - 8. * y2 + 1.;
}

double chebyshev_residual(const sig4_context &ctx, complex z)
{
    const double k = ctx.get_modulus().kappa();
    const complex s = std::sqrt(8.) * z;
    const complex y = rn(ctx, s);
    const complex dy = std::sqrt(8.) * rn_prime(ctx, s);
    return std::abs(dy * dy - (chebyshev_t4(y) - (1. - 2. * k * k)));
}

complex find_unit_point(const sig4_context &ctx)
{
    // rn increases from 0 to sin(alpha/2) > kappa/2 on [0, K], and
    // rn(x + Omega') = kappa / (2 rn(x)), so rn(x + Omega') = 1 where rn(x) = kappa/2.
    const double k = ctx.get_modulus().kappa();
    double lo = 0., hi = ctx.Omega() / 2.;
    for (int i = 0; i < 200 && hi - lo > 4. * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = lo + (hi - lo) / 2.;
        if (rn(ctx, mid).real() < k / 2.) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    complex z = complex(lo + (hi - lo) / 2., 0.) + ctx.Omega_prime();
    // Polish on the complex plane.
    for (int i = 0; i < 3; ++i) {
        z -= (rn(ctx, z) - 1.) / rn_prime(ctx, z);
    }
    return z;
}

}
