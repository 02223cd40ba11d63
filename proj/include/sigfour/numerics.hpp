#ifndef SIGFOUR_NUMERICS_HPP
#define SIGFOUR_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <utility>

namespace sigfour::numerics
{

/// Accuracy target and work caps shared by the real-line kernels.
struct tolerance_spec {
    double abs_tol = 1e-13;
    std::size_t max_subdivisions = std::size_t(1) << 16;
    std::size_t max_iterations = 200;

    // Throws domain_error unless abs_tol > 0 and both caps are positive.
    void validate() const;
};

using real_function = std::function<double(double)>;

/**
 * Adaptive Simpson quadrature of f over [a, b] with Richardson extrapolation.
 *
 * Intervals are bisected until the two-panel and one-panel Simpson estimates
 * agree to 15 times the local share of abs_tol. Throws subdivision_limit when
 * max_subdivisions is exhausted and domain_error when a > b.
 */
double integrate_adaptive(const real_function &f, double a, double b, const tolerance_spec &tol = {});

/**
 * Solve g(x) = target for strictly increasing g on the closed bracket.
 *
 * Newton steps use dg; any step that leaves the current bracket is replaced by
 * a bisection, so the iteration always converges for monotone g. Returns x
 * with |g(x) - target| <= abs_tol. Throws bracket_error when target is not in
 * [g(lo), g(hi)] and iteration_limit when max_iterations is exhausted.
 */
double invert_monotone(const real_function &g, const real_function &dg, double target,
                       std::pair<double, double> bracket, const tolerance_spec &tol = {});

}

#endif
