#ifndef SIGFOUR_HYPERGEOM_HPP
#define SIGFOUR_HYPERGEOM_HPP

namespace sigfour
{

/**
 * The elliptic modulus kappa in (0, 1), with the complementary modulus
 * lambda = sqrt(1 - kappa^2) and the modular angle alpha = arcsin(kappa).
 *
 * Every function in the library is indexed by one of these.
 */
class modulus
{
public:
    // Throws domain_error unless 0 < kappa < 1.
    explicit modulus(double kappa);

    double kappa() const noexcept
    {
        return m_kappa;
    }
    double lambda() const noexcept
    {
        return m_lambda;
    }
    double alpha() const noexcept
    {
        return m_alpha;
    }

    // The modulus whose kappa is this lambda.
    modulus complementary() const
    {
        return modulus(m_lambda);
    }

private:
    double m_kappa;
    double m_lambda;
    double m_alpha;
};

// F(1/4, 3/4; 1/2; x) for 0 <= x < 1, through the closed form
// (1/2)[(1 + z)^(-1/2) + (1 - z)^(-1/2)] with z = sqrt(x).
double f_half(double x);

// F(1/4, 3/4; 1/2; x) by direct summation of the hypergeometric series.
// Kept as an independent check on f_half; slow as x approaches 1.
double f_half_series(double x);

// F(1/4, 3/4; 1; x) for 0 <= x <= 0.999 by series summation. Throws
// slow_convergence above 0.999 (the series diverges logarithmically at 1).
double f_one(double x);

// Largest argument accepted by f_one.
inline constexpr double f_one_max_argument = 0.999;

// The complete integral K = (pi/2) F(1/4, 3/4; 1; kappa^2), the quarter period of rn on the real line.
double complete_K(const modulus &m);

}

#endif
