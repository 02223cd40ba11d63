#include <sigfour/errors.hpp>
#include <sigfour/numerics.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sigfour::numerics
{

void tolerance_spec::validate() const
{
    if (!(abs_tol > 0.)) {
        throw domain_error("tolerance_spec: abs_tol must be positive, got " + std::to_string(abs_tol));
    }
    if (max_subdivisions == 0u || max_iterations == 0u) {
        throw domain_error("tolerance_spec: subdivision and iteration caps must be positive");
    }
}

namespace
{

struct panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
    double tol;
};

double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6. * (fa + 4. * fm + fb);
}

}

double integrate_adaptive(const real_function &f, double a, double b, const tolerance_spec &tol)
{
    tol.validate();
    if (!(a <= b)) {
        throw domain_error("integrate_adaptive: require a <= b");
    }
    if (a == b) {
        return 0.;
    }

    const double m = a + (b - a) / 2.;
    const double fa = f(a), fm = f(m), fb = f(b);

    // Depth-first with an explicit stack: the left half is always finished
    // before the right, so the summation order (and the result) is fixed.
    std::vector<panel> stack;
    stack.push_back({a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol.abs_tol});

    double result = 0.;
    std::size_t subdivisions = 0;
    while (!stack.empty()) {
        const panel p = stack.back();
        stack.pop_back();

        const double lm = p.a + (p.m - p.a) / 2.;
        const double rm = p.m + (p.b - p.m) / 2.;
        const double flm = f(lm), frm = f(rm);
        const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
        const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
        const double diff = left + right - p.whole;

        // Second clause: the panel can no longer be split in floating point.
        if (std::abs(diff) <= 15. * p.tol || !(p.a < lm && lm < p.m && p.m < rm && rm < p.b)) {
            result += left + right + diff / 15.;
            continue;
        }

        if (++subdivisions > tol.max_subdivisions) {
            throw subdivision_limit("integrate_adaptive: subdivision limit of " + std::to_string(tol.max_subdivisions)
                                    + " reached before the tolerance was met");
        }
        stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, p.tol / 2.});
        stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, p.tol / 2.});
    }
    return result;
}

double invert_monotone(const real_function &g, const real_function &dg, double target,
                       std::pair<double, double> bracket, const tolerance_spec &tol)
{
    tol.validate();
    auto [lo, hi] = bracket;
    if (!(lo <= hi)) {
        throw domain_error("invert_monotone: bracket must satisfy lo <= hi");
    }

    const double glo = g(lo) - target;
    if (std::abs(glo) <= tol.abs_tol) {
        return lo;
    }
    const double ghi = g(hi) - target;
    if (std::abs(ghi) <= tol.abs_tol) {
        return hi;
    }
    if (glo > 0. || ghi < 0.) {
        throw bracket_error("invert_monotone: target " + std::to_string(target) + " lies outside g(bracket) = ["
                            + std::to_string(glo + target) + ", " + std::to_string(ghi + target) + "]");
    }

    // Secant starting point inside the bracket.
    double x = lo + (hi - lo) * (-glo / (ghi - glo));
    if (!(lo < x && x < hi)) {
        x = lo + (hi - lo) / 2.;
    }

    for (std::size_t it = 0; it < tol.max_iterations; ++it) {
        const double r = g(x) - target;
        if (std::abs(r) <= tol.abs_tol) {
            return x;
        }
        if (r < 0.) {
            lo = x;
        } else {
            hi = x;
        }

        const double slope = dg(x);
        double next = (slope > 0.) ? x - r / slope : std::numeric_limits<double>::quiet_NaN();
        if (!(lo < next && next < hi)) {
            next = lo + (hi - lo) / 2.;
        }
        if (next == x || !(lo < next && next < hi)) {
            throw iteration_limit("invert_monotone: bracket collapsed before |g(x) - target| <= "
                                  + std::to_string(tol.abs_tol));
        }
        x = next;
    }
    throw iteration_limit("invert_monotone: no convergence after " + std::to_string(tol.max_iterations)
                          + " iterations");
}

}
