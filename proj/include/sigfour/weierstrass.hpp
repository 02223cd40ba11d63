#ifndef SIGFOUR_WEIERSTRASS_HPP
#define SIGFOUR_WEIERSTRASS_HPP

#include <sigfour/hypergeom.hpp>

#include <array>
#include <complex>
#include <optional>
#include <utility>

namespace sigfour
{

using complex = std::complex<double>;

// Distance to a lattice point below which the Weierstrass engine refuses to evaluate.
inline constexpr double pole_guard = 1e-8;

// Quadrinvariant g2 and cubinvariant g3 of a Weierstrass function.
struct invariants {
    double g2;
    double g3;

    double discriminant() const noexcept
    {
        return g2 * g2 * g2 - 27. * g3 * g3;
    }
};

// Half-periods (omega, omega') of a rectangular lattice: omega real, omega'
// purely imaginary. Only the positive magnitude of omega' is stored.
struct half_periods {
    double omega;
    double omega_prime_mag;

    complex omega_prime() const noexcept
    {
        return {0., omega_prime_mag};
    }
};

// Value and first derivative of a Weierstrass function at one point.
struct wp_pair {
    complex value;
    complex derivative;
};

// A point split into its nearest lattice point and the offset from it.
struct lattice_offset {
    complex lattice_point;
    complex offset;
};

/**
 * Immutable state of a Weierstrass function with real invariants and a
 * rectangular period lattice (2 omega, 2 omega').
 *
 * The roots e1 > e2 > e3 of 4t^3 - g2 t - g3 are the midpoint values
 * wp(omega), wp(omega + omega'), wp(omega'). Construction precomputes the
 * Laurent coefficients used by evaluate().
 */
class weierstrass_context
{
public:
    weierstrass_context(invariants inv, half_periods hp, std::array<double, 3> roots,
                        std::optional<modulus> mod = std::nullopt);

    const invariants &get_invariants() const noexcept
    {
        return m_invariants;
    }
    const half_periods &get_half_periods() const noexcept
    {
        return m_half_periods;
    }
    // e1 >= e2 >= e3.
    const std::array<double, 3> &roots() const noexcept
    {
        return m_roots;
    }
    // The modulus the context was derived from; empty for contexts built from bare invariants.
    const std::optional<modulus> &get_modulus() const noexcept
    {
        return m_modulus;
    }

    lattice_offset reduce(complex z) const;

    // Throws pole_error within pole_guard of a lattice point.
    wp_pair evaluate(complex z) const;

    static constexpr std::size_t n_laurent = 40;

private:
    wp_pair laurent(complex z) const;

    invariants m_invariants;
    half_periods m_half_periods;
    std::array<double, 3> m_roots;
    std::optional<modulus> m_modulus;
    // m_coeffs[j] multiplies z^(2j + 2) in wp(z) - 1/z^2.
    std::array<double, n_laurent> m_coeffs;
    double m_series_radius;
};

// P_kappa: invariants ((1 + 3 kappa^2)/12, (1 - 9 kappa^2)/216), half-periods
// (pi F(kappa^2), i pi/sqrt(2) F(1 - kappa^2)) with F = F(1/4, 3/4; 1; .).
weierstrass_context context_P(const modulus &m);

// p_kappa: invariants ((3 lambda^2 + 1)/3, (9 lambda^2 - 1)/27), half-periods
// ((pi/2) F(kappa^2), i pi/sqrt(2) F(1 - kappa^2)).
weierstrass_context context_p(const modulus &m);

// Generic context for invariants with positive discriminant. Roots come from
// the trigonometric cubic formula and half-periods from the arithmetic-geometric
// mean, so this path is independent of the hypergeometric period formulas.
weierstrass_context context_from_invariants(invariants inv);

complex wp(const weierstrass_context &ctx, complex z);
complex wp_prime(const weierstrass_context &ctx, complex z);
wp_pair wp_both(const weierstrass_context &ctx, complex z);

// f(z) = a0 z^4 + 4 a1 z^3 + 6 a2 z^2 + 4 a3 z + a4.
struct quartic_coefficients {
    double a0, a1, a2, a3, a4;

    // f and its derivatives of order 0..4 at a real point.
    std::array<double, 5> derivatives(double x) const noexcept;
    complex operator()(complex z) const noexcept;

    // Coefficients of z -> f(z + t).
    quartic_coefficients translated(double t) const noexcept;
};

// g2 = a0 a4 - 4 a1 a3 + 3 a2^2, g3 = a0 a2 a4 + 2 a1 a2 a3 - a2^3 - a0 a3^2 - a1^2 a4.
invariants quartic_invariants(const quartic_coefficients &q);

/**
 * Solution of (w')^2 = f(w), w(0) = a, by the Weierstrass formula
 *
 *   w = a + (A wp' + f'(a)/2 [wp - f''(a)/24] + f(a) f'''(a)/24)
 *           / (2 [wp - f''(a)/24]^2 - f(a) f''''(a)/48)
 *
 * with A a square root of f(a) and wp built from quartic_invariants(q).
 * Returns a at lattice points (the limit wp -> infinity). Throws
 * invalid_square_root if A^2 != f(a), pole_error where the denominator
 * vanishes, and domain_error if the quartic has a repeated zero or its
 * period lattice is not rectangular.
 */
complex quartic_ivp_solution(const quartic_coefficients &q, double a, double A, complex z);

// Same, reusing an existing context whose invariants must match those of q.
complex quartic_ivp_solution(const weierstrass_context &ctx, const quartic_coefficients &q, double a, double A,
                             complex z);

// Truncated Eisenstein sums g2 = 60 sum' w^-4, g3 = 140 sum' w^-6 over
// w = 2 m omega1 + 2 n omega3 with |m|, |n| <= cutoff. Any lattice shape.
std::pair<complex, complex> eisenstein_invariants(complex omega1, complex omega3, int cutoff);

// Real invariants of a rectangular lattice by truncated Eisenstein sums. Requires cutoff >= 50.
invariants lattice_invariants_oracle(const half_periods &hp, int cutoff);

}

#endif
