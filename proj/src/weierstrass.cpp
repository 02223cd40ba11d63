#include <sigfour/errors.hpp>
#include <sigfour/weierstrass.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

namespace sigfour
{

namespace
{

std::string format_point(complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0. ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

double agm(double a, double b)
{
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double m = (a + b) / 2.;
        b = std::sqrt(a * b);
        a = m;
    }
    return (a + b) / 2.;
}

}

weierstrass_context::weierstrass_context(invariants inv, half_periods hp, std::array<double, 3> roots,
                                         std::optional<modulus> mod)
    : m_invariants(inv), m_half_periods(hp), m_roots(roots), m_modulus(std::move(mod))
{
    if (!(hp.omega > 0. && hp.omega_prime_mag > 0.)) {
        throw domain_error("weierstrass_context: half-periods must be positive");
    }
    std::sort(m_roots.begin(), m_roots.end(), std::greater<>{});

    // c2 = g2/20, c3 = g3/28, ck = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} cm c(k-m).
    m_coeffs[0] = inv.g2 / 20.;
    m_coeffs[1] = inv.g3 / 28.;
    for (std::size_t k = 4; k < n_laurent + 2; ++k) {
        double s = 0.;
        for (std::size_t m = 2; m <= k - 2; ++m) {
            s += m_coeffs[m - 2] * m_coeffs[k - m - 2];
        }
        m_coeffs[k - 2] = 3. * s / (static_cast<double>(2 * k + 1) * static_cast<double>(k - 3));
    }

    // The series for wp - 1/z^2 converges inside the shortest nonzero lattice vector.
    m_series_radius = .4 * 2. * std::min(hp.omega, hp.omega_prime_mag);
}

lattice_offset weierstrass_context::reduce(complex z) const
{
    const double p1 = 2. * m_half_periods.omega;
    const double p2 = 2. * m_half_periods.omega_prime_mag;
    const double n1 = std::round(z.real() / p1);
    const double n2 = std::round(z.imag() / p2);
    return {{n1 * p1, n2 * p2}, {z.real() - n1 * p1, z.imag() - n2 * p2}};
}

wp_pair weierstrass_context::laurent(complex z) const
{
    const complex w = z * z;
    complex s = 0., d = 0.;
    for (std::size_t j = n_laurent; j-- > 0;) {
        s = s * w + m_coeffs[j];
        d = d * w + static_cast<double>(2 * j + 2) * m_coeffs[j];
    }
    return {1. / w + w * s, -2. / (z * w) + z * d};
}

wp_pair weierstrass_context::evaluate(complex z) const
{
    const auto [lp, delta] = reduce(z);
    if (std::abs(delta) < pole_guard) {
        throw pole_error("Weierstrass function has a double pole at the lattice point " + format_point(lp), lp);
    }

    // Halve into the disc where the Laurent series is fast, then double back
    // with the rational duplication formulas for wp and wp'.
    complex s = delta;
    int halvings = 0;
    while (std::abs(s) > m_series_radius) {
        s /= 2.;
        ++halvings;
    }

    wp_pair r = laurent(s);
    const double g2 = m_invariants.g2;
    for (int i = 0; i < halvings; ++i) {
        const complex p = r.value, dp = r.derivative;
        const complex ddp = 6. * p * p - g2 / 2.;
        const complex q = ddp / dp;
        r.value = -2. * p + q * q / 4.;
        r.derivative = -dp + 3. * p * q - q * q * q / 4.;
    }
    return r;
}

weierstrass_context context_P(const modulus &m)
{
    const double k = m.kappa();
    const double k2 = k * k;
    const invariants inv{(1. + 3. * k2) / 12., (1. - 9. * k2) / 216.};
    const half_periods hp{std::numbers::pi * f_one(k2), std::numbers::pi / std::numbers::sqrt2 * f_one(1. - k2)};
    return weierstrass_context(inv, hp, {1. / 6., -1. / 12. + k / 4., -1. / 12. - k / 4.}, m);
}

weierstrass_context context_p(const modulus &m)
{
    const double k2 = m.kappa() * m.kappa();
    const double l = m.lambda();
    const double l2 = l * l;
    const invariants inv{(3. * l2 + 1.) / 3., (9. * l2 - 1.) / 27.};
    const half_periods hp{std::numbers::pi / 2. * f_one(k2), std::numbers::pi / std::numbers::sqrt2 * f_one(1. - k2)};
    return weierstrass_context(inv, hp, {1. / 6. + l / 2., 1. / 6. - l / 2., -1. / 3.}, m);
}

weierstrass_context context_from_invariants(invariants inv)
{
    const double disc = inv.discriminant();
    if (disc == 0.) {
        throw domain_error("context_from_invariants: zero discriminant (repeated root, degenerate lattice)");
    }
    if (!(disc > 0.)) {
        throw domain_error("context_from_invariants: negative discriminant; only rectangular lattices are supported");
    }

    // t^3 + p t + q with p = -g2/4, q = -g3/4; disc > 0 forces p < 0.
    const double p = -inv.g2 / 4., q = -inv.g3 / 4.;
    const double rad = 2. * std::sqrt(-p / 3.);
    const double c = std::clamp(3. * q / (2. * p) * std::sqrt(-3. / p), -1., 1.);
    const double theta = std::acos(c) / 3.;
    std::array<double, 3> e{};
    for (int k = 0; k < 3; ++k) {
        e[k] = rad * std::cos(theta - 2. * std::numbers::pi * k / 3.);
    }
    std::sort(e.begin(), e.end(), std::greater<>{});

    const half_periods hp{std::numbers::pi / (2. * agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]))),
                          std::numbers::pi / (2. * agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2])))};
    return weierstrass_context(inv, hp, e);
}

wp_pair wp_both(const weierstrass_context &ctx, complex z)
{
    return ctx.evaluate(z);
}

complex wp(const weierstrass_context &ctx, complex z)
{
    return ctx.evaluate(z).value;
}

complex wp_prime(const weierstrass_context &ctx, complex z)
{
    return ctx.evaluate(z).derivative;
}

std::array<double, 5> quartic_coefficients::derivatives(double x) const noexcept
{
    return {(((a0 * x + 4. * a1) * x + 6. * a2) * x + 4. * a3) * x + a4,
            ((4. * a0 * x + 12. * a1) * x + 12. * a2) * x + 4. * a3,
            (12. * a0 * x + 24. * a1) * x + 12. * a2,
            24. * a0 * x + 24. * a1,
            24. * a0};
}

complex quartic_coefficients::operator()(complex z) const noexcept
{
    return (((a0 * z + 4. * a1) * z + 6. * a2) * z + 4. * a3) * z + a4;
}

quartic_coefficients quartic_coefficients::translated(double t) const noexcept
{
    // Taylor expansion about t: f(z + t) = sum f^(j)(t) z^j / j!.
    const auto d = derivatives(t);
    return {d[4] / 24., d[3] / 24., d[2] / 12., d[1] / 4., d[0]};
}

invariants quartic_invariants(const quartic_coefficients &q)
{
    return {q.a0 * q.a4 - 4. * q.a1 * q.a3 + 3. * q.a2 * q.a2,
            q.a0 * q.a2 * q.a4 + 2. * q.a1 * q.a2 * q.a3 - q.a2 * q.a2 * q.a2 - q.a0 * q.a3 * q.a3
                - q.a1 * q.a1 * q.a4};
}

complex quartic_ivp_solution(const quartic_coefficients &q, double a, double A, complex z)
{
    return quartic_ivp_solution(context_from_invariants(quartic_invariants(q)), q, a, A, z);
}

complex quartic_ivp_solution(const weierstrass_context &ctx, const quartic_coefficients &q, double a, double A,
                             complex z)
{
    const invariants inv = quartic_invariants(q);
    const invariants &cinv = ctx.get_invariants();
    if (std::abs(inv.g2 - cinv.g2) > 1e-12 * (1. + std::abs(inv.g2))
        || std::abs(inv.g3 - cinv.g3) > 1e-12 * (1. + std::abs(inv.g3))) {
        throw domain_error("quartic_ivp_solution: context invariants do not match the quartic");
    }

    const auto f = q.derivatives(a);
    if (std::abs(A * A - f[0]) > 1e-12 * (1. + std::abs(f[0]))) {
        throw invalid_square_root("quartic_ivp_solution: A^2 = " + std::to_string(A * A) + " but f(a) = "
                                  + std::to_string(f[0]));
    }

    const auto [lp, delta] = ctx.reduce(z);
    if (std::abs(delta) < pole_guard) {
        return a;
    }

    const auto [P, dP] = ctx.evaluate(z);
    const complex s = P - f[2] / 24.;
    const complex num = A * dP + f[1] / 2. * s + f[0] * f[3] / 24.;
    const complex den = 2. * s * s - f[0] * f[4] / 48.;
    if (std::abs(den) < 1e-12 * (1. + std::abs(num))) {
        throw pole_error("quartic_ivp_solution: pole at " + format_point(z), z);
    }
    return a + num / den;
}

std::pair<complex, complex> eisenstein_invariants(complex omega1, complex omega3, int cutoff)
{
    if (cutoff < 1) {
        throw domain_error("eisenstein_invariants: cutoff must be positive");
    }
    // Row sums first, then the rows, to keep the accumulation well balanced.
    complex g2 = 0., g3 = 0.;
    for (int n = -cutoff; n <= cutoff; ++n) {
        complex r2 = 0., r3 = 0.;
        for (int m = -cutoff; m <= cutoff; ++m) {
            if (m == 0 && n == 0) {
                continue;
            }
            const complex w = 2. * static_cast<double>(m) * omega1 + 2. * static_cast<double>(n) * omega3;
            const complex iw2 = 1. / (w * w);
            const complex iw4 = iw2 * iw2;
            r2 += iw4;
            r3 += iw4 * iw2;
        }
        g2 += r2;
        g3 += r3;
    }
    return {60. * g2, 140. * g3};
}

invariants lattice_invariants_oracle(const half_periods &hp, int cutoff)
{
    if (cutoff < 50) {
        throw domain_error("lattice_invariants_oracle: cutoff must be at least 50, got " + std::to_string(cutoff));
    }
    const auto [g2, g3] = eisenstein_invariants(hp.omega, hp.omega_prime(), cutoff);
    return {g2.real(), g3.real()};
}

}
