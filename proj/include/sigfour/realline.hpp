#ifndef SIGFOUR_REALLINE_HPP
#define SIGFOUR_REALLINE_HPP

#include <sigfour/hypergeom.hpp>

namespace sigfour
{

// The four signature-four functions at one real point, all derived from a single phi(u).
struct sig4_values {
    double sn2;
    double cn2;
    double dn2;
    double rn;
};

/**
 * Real-line construction by integral inversion.
 *
 * phi(u) is the inverse of T -> int_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt,
 * found by safeguarded Newton iteration on the quadrature of the integrand.
 * The argument is first reduced to [-K, K] using phi(u + 2K) = phi(u) + pi.
 * This path shares no code with the Weierstrass evaluation in sig4.hpp and
 * serves as its oracle on the real axis.
 */
double phi(double u, const modulus &m);

// arcsin(kappa sin(phi(u))), with values in [-alpha, alpha].
double psi(double u, const modulus &m);

// sn2 = sin(phi), cn2 = cos(phi), dn2 = cos(psi), rn = sin(psi / 2).
sig4_values sig4_real(double u, const modulus &m);

// The defining integral int_0^T F(1/4, 3/4; 1/2; kappa^2 sin^2 t) dt for T >= 0.
double phi_integral(double T, const modulus &m);

}

#endif
