#ifndef SIGFOUR_SIG4_HPP
#define SIGFOUR_SIG4_HPP

#include <sigfour/hypergeom.hpp>
#include <sigfour/weierstrass.hpp>

#include <complex>

namespace sigfour
{

/**
 * Signature-four elliptic functions on the complex plane.
 *
 * rn is the odd order-two elliptic function
 *
 *   rn = (kappa/4) P' / ((kappa/4)^2 - (1/12 + P)^2)
 *
 * where P = P_kappa (see context_P). It has simple zeros at 0 and Omega and
 * simple poles at Omega' and Omega + Omega', modulo the lattice (2 Omega, 2 Omega').
 * dn2, cn2 and sn2^2 are built from rn; dn2 is also available through p_kappa.
 *
 * The context holds both Weierstrass engines; it is immutable and can be
 * shared between threads.
 */
class sig4_context
{
public:
    explicit sig4_context(const modulus &m);

    const modulus &get_modulus() const noexcept
    {
        return m_modulus;
    }
    // Engine for P_kappa; its lattice is the period lattice of rn.
    const weierstrass_context &P() const noexcept
    {
        return m_P;
    }
    // Engine for p_kappa; its lattice is the period lattice of dn2.
    const weierstrass_context &p() const noexcept
    {
        return m_p;
    }

    double Omega() const noexcept
    {
        return m_P.get_half_periods().omega;
    }
    complex Omega_prime() const noexcept
    {
        return m_P.get_half_periods().omega_prime();
    }
    double omega() const noexcept
    {
        return m_p.get_half_periods().omega;
    }
    complex omega_prime() const noexcept
    {
        return m_p.get_half_periods().omega_prime();
    }

private:
    modulus m_modulus;
    weierstrass_context m_P;
    weierstrass_context m_p;
};

enum class dn2_path { via_rn, via_p };

enum class half_period_shift { omega, omega_prime, omega_plus_omega_prime };

enum class point_kind { zero, pole, regular };

enum class special_point { origin, omega, omega_prime, omega_plus_omega_prime, none };

struct point_class {
    point_kind kind;
    // 1 for zeros and poles of rn, 0 otherwise.
    int order;
    special_point representative;
};

// All of these throw pole_error at the poles of the function concerned.
complex rn(const sig4_context &ctx, complex z);
complex rn_prime(const sig4_context &ctx, complex z);
complex rn_squared(const sig4_context &ctx, complex z);
complex dn2(const sig4_context &ctx, complex z, dn2_path path = dn2_path::via_rn);
complex cn2(const sig4_context &ctx, complex z);
complex sn2_squared(const sig4_context &ctx, complex z);

// rn(z + shift) from the closed half-period formulas in P(z), P'(z):
//   Omega:            -rn(z)
//   Omega':           P'(z) / (2 (1/6 - P(z)))
//   Omega + Omega':   P'(z) / (2 (P(z) - 1/6))
complex shift_value(const sig4_context &ctx, complex z, half_period_shift shift);

// Zero/pole classification of rn at z, congruence tolerance 1e-9.
point_class classify(const sig4_context &ctx, complex z);

// Chebyshev polynomial of the first kind of degree four.
complex chebyshev_t4(complex y);

// |(y')^2 - (T4(y) - (1 - 2 kappa^2))| for y(z) = rn(sqrt(8) z).
double chebyshev_residual(const sig4_context &ctx, complex z);

// A point z1 = x1 + Omega' with 0 < x1 < K and rn(z1) = 1.
complex find_unit_point(const sig4_context &ctx);

}

#endif
