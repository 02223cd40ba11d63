#ifndef SIGFOUR_ERRORS_HPP
#define SIGFOUR_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace sigfour
{

// Root of every error the library raises.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of a function (bad modulus, x >= 1, ...).
class domain_error : public error
{
public:
    using error::error;
};

class subdivision_limit : public error
{
public:
    using error::error;
};

class iteration_limit : public error
{
public:
    using error::error;
};

class bracket_error : public error
{
public:
    using error::error;
};

// Hypergeometric series with c - a - b = 0 too close to its logarithmic singularity at 1.
class slow_convergence : public error
{
public:
    using error::error;
};

class invalid_square_root : public error
{
public:
    using error::error;
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class pole_error : public error
{
public:
    pole_error(const std::string &what, std::complex<double> nearest)
        : error(what), m_nearest(nearest)
    {}

    // The pole (a lattice point or a congruent of a half-period) that triggered the error.
    std::complex<double> nearest() const noexcept
    {
        return m_nearest;
    }

private:
    std::complex<double> m_nearest;
};

}

#endif
