#include <sigfour/errors.hpp>
#include <sigfour/hypergeom.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace sigfour
{

modulus::modulus(double kappa)
{
    if (!(kappa > 0. && kappa < 1.)) {
        throw domain_error("modulus kappa must lie in the open interval (0, 1), got " + std::to_string(kappa));
    }
    m_kappa = kappa;
    m_lambda = std::sqrt((1. - kappa) * (1. + kappa));
    m_alpha = std::asin(kappa);
}

namespace
{

constexpr long max_terms = 1'000'000;

void check_unit_interval(double x, const char *name)
{
    if (!(x >= 0. && x < 1.)) {
        throw domain_error(std::string(name) + ": argument must lie in [0, 1), got " + std::to_string(x));
    }
}

// Sum of F(1/4, 3/4; c; x) in extended precision. Terms are all positive and
// eventually geometric with ratio x, so the remaining tail is bounded by
// |term| / (1 - x); summation stops once that bound drops below 1e-17 of the sum.
double hyper_series(long double c, long double x)
{
    const long double a = 0.25L, b = 0.75L;
    long double term = 1.L, sum = 1.L;
    const long double tail_factor = 1.L / (1.L - x);
    for (long n = 0; n < max_terms; ++n) {
        const long double nn = static_cast<long double>(n);
        term *= (nn + a) * (nn + b) / ((nn + c) * (nn + 1.L)) * x;
        sum += term;
        if (term * tail_factor < 1e-17L * sum) {
            return static_cast<double>(sum);
        }
    }
    throw slow_convergence("hypergeometric series did not converge in " + std::to_string(max_terms) + " terms");
}

}

double f_half(double x)
{
    check_unit_interval(x, "f_half");
    const double z = std::sqrt(x);
    return .5 * (1. / std::sqrt(1. + z) + 1. / std::sqrt(1. - z));
}

double f_half_series(double x)
{
    check_unit_interval(x, "f_half_series");
    return hyper_series(.5L, x);
}

double f_one(double x)
{
    check_unit_interval(x, "f_one");
    if (x > f_one_max_argument) {
        throw slow_convergence("f_one: argument " + std::to_string(x)
                               + " exceeds 0.999; F(1/4, 3/4; 1; x) diverges logarithmically at x = 1");
    }
    return hyper_series(1.L, x);
}

double complete_K(const modulus &m)
{
    return std::numbers::pi / 2. * f_one(m.kappa() * m.kappa());
}

}
