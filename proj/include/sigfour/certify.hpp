#ifndef SIGFOUR_CERTIFY_HPP
#define SIGFOUR_CERTIFY_HPP

#include <sigfour/sig4.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sigfour
{

struct sampling_config {
    std::uint64_t seed = 20240601;
    std::size_t samples_per_check = 200;
    // Radius of the excluded disc around every half-period congruent, as a fraction of 2 Omega.
    double pole_exclusion_radius = 0.05;
    // Analytic-formula tier. Finite-difference checks use 1e3 times this and
    // the truncated lattice sums 1e4 times this.
    double tolerance = 1e-8;
    std::vector<double> kappa_list{0.3, 0.5, 0.8};

    // Throws domain_error on an invalid configuration.
    void validate() const;

    double fd_tolerance() const noexcept
    {
        return tolerance * 1e3;
    }
    double lattice_tolerance() const noexcept
    {
        return tolerance * 1e4;
    }
};

struct check_result {
    std::string check_id;
    std::string description;
    double kappa;
    std::size_t samples;
    double max_abs_residual;
    double tolerance;
    bool pass;
};

struct certification_report {
    sampling_config config;
    std::vector<check_result> results;
    bool overall_pass;
};

/**
 * Run every identity check for every kappa in the configuration.
 *
 * Sampled checks draw points uniformly from the rn period cell
 * [0, 2 Omega) x [0, 2|Omega'|) minus discs around the half-period congruents
 * (zeros and poles of rn, lattice points of P). The report is a pure
 * function of the configuration. Evaluation failures are recorded as
 * infinite residuals, never thrown.
 */
certification_report certify(const sampling_config &config);

enum class report_format { json, markdown };

std::string render_report(const certification_report &report, report_format format);

// splitmix64 output function applied to x (one step of the generator whose state is x).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Uniform double in [0, 1) for (seed, sample index, attempt, coordinate), independent of call order.
double sample_unit(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt, std::uint64_t coord) noexcept;

// The sample points used for one kappa.
std::vector<complex> sample_points(const sig4_context &ctx, const sampling_config &config);

}

#endif
