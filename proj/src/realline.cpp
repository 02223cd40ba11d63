#include <sigfour/errors.hpp>
#include <sigfour/numerics.hpp>
#include <sigfour/realline.hpp>

#include <cmath>
#include <numbers>

namespace sigfour
{

namespace
{

double integrand(double t, double kappa)
{
    const double s = kappa * std::sin(t);
    return f_half(s * s);
}

}

double phi_integral(double T, const modulus &m)
{
    const double kappa = m.kappa();
    return numerics::integrate_adaptive([kappa](double t) { return integrand(t, kappa); }, 0., T);
}

double phi(double u, const modulus &m)
{
    if (!std::isfinite(u)) {
        throw domain_error("phi: argument must be finite");
    }
    const double K = complete_K(m);
    const double turns = std::round(u / (2. * K));
    const double r = u - turns * (2. * K);
    const double target = std::abs(r);

    double base = 0.;
    if (target > 0.) {
        // 1 <= integrand <= F(kappa^2) gives target / F(kappa^2) <= phi <= target.
        const double kappa = m.kappa();
        const double top = f_half(kappa * kappa);
        base = numerics::invert_monotone([&m](double T) { return phi_integral(T, m); },
                                         [kappa](double T) { return integrand(T, kappa); }, target,
                                         {target / top, target});
    }
    return std::copysign(base, r) + turns * std::numbers::pi;
}

double psi(double u, const modulus &m)
{
    return std::asin(m.kappa() * std::sin(phi(u, m)));
}

sig4_values sig4_real(double u, const modulus &m)
{
    const double p = phi(u, m);
    const double sp = std::sin(p);
    const double ps = std::asin(m.kappa() * sp);
    return {sp, std::cos(p), std::cos(ps), std::sin(ps / 2.)};
}

}
