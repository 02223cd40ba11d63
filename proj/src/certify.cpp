#include <sigfour/certify.hpp>
#include <sigfour/errors.hpp>
#include <sigfour/hypergeom.hpp>
#include <sigfour/json_writer.hpp>
#include <sigfour/realline.hpp>
#include <sigfour/weierstrass.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace sigfour
{

void sampling_config::validate() const
{
    if (!(tolerance > 0.)) {
        throw domain_error("certify: tolerance must be positive");
    }
    if (samples_per_check == 0u) {
        throw domain_error("certify: samples_per_check must be positive");
    }
    if (!(pole_exclusion_radius > 0. && pole_exclusion_radius < .25)) {
        throw domain_error("certify: pole_exclusion_radius must lie in (0, 0.25)");
    }
    if (kappa_list.empty()) {
        throw domain_error("certify: kappa_list must not be empty");
    }
    for (const double k : kappa_list) {
        if (!(k > 0. && k < 1.)) {
            throw domain_error("certify: every kappa must lie in the open interval (0, 1), got " + std::to_string(k));
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double sample_unit(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt, std::uint64_t coord) noexcept
{
    const std::uint64_t counter = (index << 32) | ((attempt & 0x3FFFFFFFull) << 2) | (coord & 3u);
    const std::uint64_t bits = splitmix64(seed + splitmix64(counter));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<complex> sample_points(const sig4_context &ctx, const sampling_config &config)
{
    const double om = ctx.Omega(), omp = ctx.Omega_prime().imag();
    const double radius = config.pole_exclusion_radius * 2. * om;
    std::vector<complex> pts;
    pts.reserve(config.samples_per_check);
    for (std::size_t i = 0; i < config.samples_per_check; ++i) {
        for (std::uint64_t attempt = 0;; ++attempt) {
            const complex z(2. * om * sample_unit(config.seed, i, attempt, 0),
                            2. * omp * sample_unit(config.seed, i, attempt, 1));
            const complex nearest(std::round(z.real() / om) * om, std::round(z.imag() / omp) * omp);
            if (std::abs(z - nearest) >= radius) {
                pts.push_back(z);
                break;
            }
        }
    }
    return pts;
}

namespace
{

constexpr double fd_step = 1e-3;

// Max-aggregation of residuals. A NaN residual sticks, so it can never pass.
class accumulator
{
public:
    void add(double r)
    {
        ++m_count;
        if (std::isnan(m_max)) {
            return;
        }
        if (std::isnan(r) || r > m_max) {
            m_max = r;
        }
    }

    // Evaluate one residual; library errors count as an infinite residual.
    template <typename F>
    void eval(F &&f)
    {
        try {
            add(f());
        } catch (const error &) {
            add(std::numeric_limits<double>::infinity());
        }
    }

    check_result result(std::string id, std::string description, double kappa, double tol) const
    {
        return {std::move(id), std::move(description), kappa, m_count, m_max, tol, m_max <= tol};
    }

private:
    std::size_t m_count = 0;
    double m_max = 0.;
};

// |a - b| / (1 + |b|).
double scaled(complex a, complex b)
{
    return std::abs(a - b) / (1. + std::abs(b));
}

// |x + y - z| / (1 + |x| + |y| + |z|): the identity's own terms set the scale.
double balanced(complex x, complex y, complex z)
{
    return std::abs(x + y - z) / (1. + std::abs(x) + std::abs(y) + std::abs(z));
}

using cfun = std::function<complex(complex)>;

complex fd_first(const cfun &f, complex z)
{
    const double h = fd_step;
    return (-f(z + 2. * h) + 8. * f(z + h) - 8. * f(z - h) + f(z - 2. * h)) / (12. * h);
}

complex fd_second(const cfun &f, complex z)
{
    const double h = fd_step;
    return (-f(z + 2. * h) + 16. * f(z + h) - 30. * f(z) + 16. * f(z - h) - f(z - 2. * h)) / (12. * h * h);
}

struct check_env {
    const sig4_context &ctx;
    const std::vector<complex> &pts;
    const sampling_config &cfg;
    double kappa;
    double lambda;
};

void check_hypergeometric(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    for (int i = 0; i < 50; ++i) {
        const double x = .96 * i / 49.;
        acc.eval([&] { return std::abs(f_half(x) - f_half_series(x)); });
    }
    for (int i = 0; i < 50; ++i) {
        const double p = std::numbers::pi / 2. * i / 50.;
        const double s = std::sin(p);
        acc.eval([&] { return std::abs(f_half(s * s) * std::cos(p) - std::cos(p / 2.)); });
    }
    const modulus &m = e.ctx.get_modulus();
    acc.eval([&] { return std::abs(complete_K(m) - phi_integral(std::numbers::pi / 2., m)); });
    acc.eval([&] { return std::abs(2. * complete_K(m) - phi_integral(std::numbers::pi, m)); });
    out.push_back(acc.result("C1", "F(1/4,3/4;1/2;x) closed form vs series; F(1/4,3/4;1/2;sin^2 psi) cos psi = cos(psi/2); K series vs quadrature",
                             e.kappa, e.cfg.tolerance));
}

void check_ivp(const check_env &e, std::vector<check_result> &out)
{
    const double k = e.kappa;
    accumulator analytic, fd;
    const cfun f = [&](complex z) { return rn(e.ctx, z); };
    for (const complex z : e.pts) {
        analytic.eval([&] {
            const complex r = rn(e.ctx, z), d = rn_prime(e.ctx, z);
            const complex r2 = r * r;
            return std::abs(d * d - (r2 * r2 - r2 + k * k / 4.)) / (1. + std::abs(r2 * r2));
        });
        fd.eval([&] {
            const complex r = rn(e.ctx, z), d = fd_first(f, z);
            const complex r2 = r * r;
            return std::max(std::abs(d * d - (r2 * r2 - r2 + k * k / 4.)) / (1. + std::abs(r2 * r2)),
                            scaled(d, rn_prime(e.ctx, z)));
        });
    }
    out.push_back(analytic.result("C2", "(rn')^2 = rn^4 - rn^2 + kappa^2/4 with analytic rn', scaled by 1 + |rn|^4",
                                  k, e.cfg.tolerance));
    out.push_back(fd.result("C2-fd", "(rn')^2 = rn^4 - rn^2 + kappa^2/4 with finite-difference rn'; analytic vs finite-difference rn'",
                            k, e.cfg.fd_tolerance()));
}

void check_coperiodic(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const complex p1 = 2. * e.ctx.Omega(), p2 = 2. * e.ctx.Omega_prime();
    for (const complex z : e.pts) {
        acc.eval([&] {
            const complex r = rn(e.ctx, z);
            return std::max(scaled(rn(e.ctx, z + p1), r), scaled(rn(e.ctx, z + p2), r));
        });
    }
    out.push_back(acc.result("C3", "rn(z + 2 Omega) = rn(z), rn(z + 2 Omega') = rn(z)", e.kappa, e.cfg.tolerance));
}

void check_plus_omega(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const complex om = e.ctx.Omega();
    for (const complex z : e.pts) {
        acc.eval([&] {
            const complex r = rn(e.ctx, z);
            return std::max(scaled(rn(e.ctx, z + om), -r),
                            scaled(shift_value(e.ctx, z, half_period_shift::omega), -r));
        });
    }
    out.push_back(acc.result("C4", "rn(z + Omega) = -rn(z)", e.kappa, e.cfg.tolerance));
}

void check_reciprocal(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const complex omp = e.ctx.Omega_prime(), both = e.ctx.Omega() + e.ctx.Omega_prime();
    for (const complex z : e.pts) {
        acc.eval([&] {
            const complex shifted = rn(e.ctx, z + omp);
            const double recip = std::abs(shifted * rn(e.ctx, z) - e.kappa / 2.);
            const double prime = scaled(shift_value(e.ctx, z, half_period_shift::omega_prime), shifted);
            const double sum = scaled(shift_value(e.ctx, z, half_period_shift::omega_plus_omega_prime),
                                      rn(e.ctx, z + both));
            return std::max({recip, prime, sum});
        });
    }
    out.push_back(acc.result("C5", "rn(z + Omega') rn(z) = kappa/2; closed shift formulas for Omega' and Omega + Omega'",
                             e.kappa, e.cfg.tolerance));
}

void check_midpoints(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const double k = e.kappa, l = e.lambda;
    const auto &P = e.ctx.P();
    const auto &p = e.ctx.p();
    const complex Om = e.ctx.Omega(), Omp = e.ctx.Omega_prime();
    const complex om = e.ctx.omega(), omp = e.ctx.omega_prime();
    const auto mid = [&](const weierstrass_context &c, complex z, double expected) {
        acc.eval([&] {
            const auto [v, d] = wp_both(c, z);
            return std::max(std::abs(v - expected), std::abs(d));
        });
    };
    mid(P, Om, 1. / 6.);
    mid(P, Om + Omp, -1. / 12. + k / 4.);
    mid(P, Omp, -1. / 12. - k / 4.);
    mid(p, om, 1. / 6. + l / 2.);
    mid(p, om + omp, 1. / 6. - l / 2.);
    mid(p, omp, -1. / 3.);
    acc.eval([&] { return std::abs(dn2(e.ctx, om) - l); });
    acc.eval([&] { return std::abs(dn2(e.ctx, om + omp) + l); });
    acc.eval([&] { return std::abs(dn2(e.ctx, om, dn2_path::via_p) - l); });
    acc.eval([&] { return std::abs(dn2(e.ctx, om + omp, dn2_path::via_p) + l); });
    out.push_back(acc.result("C6", "midpoint values of P and p (with vanishing derivatives); dn2(omega) = lambda, dn2(omega + omega') = -lambda",
                             e.kappa, e.cfg.tolerance));
}

void check_homogeneity(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const sig4_context comp(e.ctx.get_modulus().complementary());
    const complex rot(0., std::sqrt(2.));
    for (const complex w : e.pts) {
        acc.eval([&] {
            const complex z = w / rot;
            return scaled(wp(comp.p(), z), -2. * wp(e.ctx.P(), w));
        });
    }
    acc.eval([&] { return std::abs(e.ctx.Omega() - std::sqrt(2.) * comp.omega_prime().imag()); });
    acc.eval([&] { return std::abs(e.ctx.Omega_prime().imag() - std::sqrt(2.) * comp.omega()); });
    out.push_back(acc.result("C7", "p_lambda(z) = -2 P_kappa(i sqrt2 z); Omega_kappa = sqrt2 |omega'_lambda|, |Omega'_kappa| = sqrt2 omega_lambda",
                             e.kappa, e.cfg.tolerance));
}

void check_dn2(const check_env &e, std::vector<check_result> &out)
{
    accumulator dual, ode;
    const double l2 = e.lambda * e.lambda;
    const cfun f = [&](complex z) { return dn2(e.ctx, z); };
    for (const complex z : e.pts) {
        dual.eval([&] { return scaled(dn2(e.ctx, z, dn2_path::via_p), dn2(e.ctx, z)); });
        ode.eval([&] {
            const complex d = dn2(e.ctx, z), dd = fd_first(f, z);
            return scaled(dd * dd, 2. * (1. - d) * (d * d - l2));
        });
    }
    out.push_back(dual.result("C8", "dn2 = 1 - 2 rn^2 agrees with dn2 = 1 - (kappa^2/2)/(1/3 + p)", e.kappa,
                              e.cfg.tolerance));
    out.push_back(ode.result("C8-fd", "(dn2')^2 = 2 (1 - dn2)(dn2^2 - lambda^2) with finite-difference dn2'", e.kappa,
                             e.cfg.fd_tolerance()));
}

void check_algebraic(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const double k2 = e.kappa * e.kappa, l2 = e.lambda * e.lambda;
    for (const complex z : e.pts) {
        acc.eval([&] {
            const complex c = cn2(e.ctx, z), d = dn2(e.ctx, z), s2 = sn2_squared(e.ctx, z);
            const complex c2 = c * c, d2 = d * d;
            return std::max({balanced(k2 * c2, l2, d2), balanced(c2, s2, 1.), balanced(d2, k2 * s2, 1.),
                             scaled(dn2(e.ctx, z, dn2_path::via_p), 1. - 2. * rn_squared(e.ctx, z)),
                             scaled(rn_squared(e.ctx, z), rn(e.ctx, z) * rn(e.ctx, z))});
        });
    }
    out.push_back(acc.result("C9", "kappa^2 cn2^2 = dn2^2 - lambda^2, cn2^2 + sn2^2 = 1, dn2^2 + kappa^2 sn2^2 = 1, dn2 = 1 - 2 rn^2; scaled by the terms",
                             e.kappa, e.cfg.tolerance));
}

void check_dn2_periods(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const complex Om = e.ctx.Omega();
    for (const complex z : e.pts) {
        acc.eval([&] { return scaled(dn2(e.ctx, z + Om), dn2(e.ctx, z)); });
    }
    acc.eval([&] { return std::abs(e.ctx.Omega() - 2. * e.ctx.omega()); });
    acc.eval([&] { return std::abs(e.ctx.Omega_prime() - e.ctx.omega_prime()); });
    // Omega' must not be a period: report the shortfall below a 0.01 separation.
    const complex probe(.3, .1);
    acc.eval([&] {
        return std::max(0., .01 - std::abs(dn2(e.ctx, probe + e.ctx.Omega_prime()) - dn2(e.ctx, probe)));
    });
    out.push_back(acc.result("C10", "dn2(z + Omega) = dn2(z); Omega = 2 omega, Omega' = omega'; Omega' is not a period of dn2",
                             e.kappa, e.cfg.tolerance));
}

void check_chebyshev(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const double s8 = std::sqrt(8.);
    for (const complex w : e.pts) {
        acc.eval([&] {
            const complex y = rn(e.ctx, w);
            return chebyshev_residual(e.ctx, w / s8) / (1. + 8. * std::norm(y) * std::norm(y));
        });
    }
    out.push_back(acc.result("C11", "y(z) = rn(sqrt8 z) solves (y')^2 = T4(y) - (1 - 2 kappa^2), scaled by 1 + 8|y|^4",
                             e.kappa, e.cfg.tolerance));
}

void check_real_line(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    const modulus &m = e.ctx.get_modulus();
    const double K = complete_K(m);
    for (int i = 0; i < 64; ++i) {
        const double u = -2. * K + 4. * K * i / 63.;
        acc.eval([&] {
            const sig4_values v = sig4_real(u, m);
            return std::max({std::abs(rn(e.ctx, u) - v.rn), std::abs(cn2(e.ctx, u) - v.cn2),
                             std::abs(dn2(e.ctx, u) - v.dn2), std::abs(sn2_squared(e.ctx, u) - v.sn2 * v.sn2)});
        });
    }
    out.push_back(acc.result("C12", "integral-inversion rn, cn2, dn2, sn2^2 on [-2K, 2K] vs Weierstrass closed forms",
                             e.kappa, e.cfg.tolerance));
}

void check_lattice_sums(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    for (const auto *c : {&e.ctx.P(), &e.ctx.p()}) {
        acc.eval([&] {
            const invariants s = lattice_invariants_oracle(c->get_half_periods(), 300);
            const invariants &g = c->get_invariants();
            return std::max(std::abs(s.g2 - g.g2), std::abs(s.g3 - g.g3));
        });
    }
    out.push_back(acc.result("C13", "Eisenstein sums (cutoff 300) over the hypergeometric period lattices of P and p vs closed-form invariants",
                             e.kappa, e.cfg.lattice_tolerance()));
}

void check_simple_zero(const check_env &e, std::vector<check_result> &out)
{
    accumulator acc;
    acc.eval([&] {
        const complex z1 = find_unit_point(e.ctx);
        const complex r = rn(e.ctx, z1);
        const double slope = std::abs(rn_prime(e.ctx, z1) * (2. * r - 4. * r * r * r));
        if (!(slope >= e.kappa / 2.)) {
            return std::numeric_limits<double>::infinity();
        }
        return std::max(std::abs(r - 1.), std::abs(slope - e.kappa));
    });
    out.push_back(acc.result("C14", "at rn(z1) = 1 the zero of rn^2 (1 - rn^2) is simple: |d/dz| = kappa",
                             e.kappa, e.cfg.tolerance));
}

void check_second_order(const check_env &e, std::vector<check_result> &out)
{
    accumulator ode2, quartic;
    const double k = e.kappa;
    const cfun f = [&](complex z) { return rn(e.ctx, z); };
    for (const complex z : e.pts) {
        ode2.eval([&] {
            const complex r = rn(e.ctx, z);
            return scaled(fd_second(f, z), 2. * r * r * r - r);
        });
    }

    const quartic_coefficients q{1., 0., -1. / 6., 0., k * k / 4.};
    const invariants &G = e.ctx.P().get_invariants();
    quartic.eval([&] {
        const invariants g = quartic_invariants(q);
        return std::max(std::abs(g.g2 - G.g2), std::abs(g.g3 - G.g3));
    });
    quartic.eval([&] {
        const invariants g = quartic_invariants(q), t = quartic_invariants(q.translated(.3));
        return std::max(std::abs(g.g2 - t.g2), std::abs(g.g3 - t.g3));
    });
    const weierstrass_context generic = context_from_invariants(quartic_invariants(q));
    for (const complex z : e.pts) {
        quartic.eval([&] { return scaled(quartic_ivp_solution(generic, q, 0., -k / 2., z), rn(e.ctx, z)); });
    }
    out.push_back(ode2.result("C15-fd", "rn'' = 2 rn^3 - rn with a five-point second difference", k,
                              e.cfg.fd_tolerance()));
    out.push_back(quartic.result("C15", "invariants of z^4 - z^2 + kappa^2/4 (and of its translate) equal (G2, G3); Weierstrass quartic solution equals rn",
                                 k, e.cfg.tolerance));
}

}

certification_report certify(const sampling_config &config)
{
    config.validate();
    certification_report report{config, {}, true};
    for (const double kappa : config.kappa_list) {
        const modulus m(kappa);
        const sig4_context ctx(m);
        const std::vector<complex> pts = sample_points(ctx, config);
        const check_env env{ctx, pts, config, kappa, m.lambda()};

        check_hypergeometric(env, report.results);
        check_ivp(env, report.results);
        check_coperiodic(env, report.results);
        check_plus_omega(env, report.results);
        check_reciprocal(env, report.results);
        check_midpoints(env, report.results);
        check_homogeneity(env, report.results);
        check_dn2(env, report.results);
        check_algebraic(env, report.results);
        check_dn2_periods(env, report.results);
        check_chebyshev(env, report.results);
        check_real_line(env, report.results);
        check_lattice_sums(env, report.results);
        check_simple_zero(env, report.results);
        check_second_order(env, report.results);
    }
    for (const auto &r : report.results) {
        report.overall_pass = report.overall_pass && r.pass;
    }
    return report;
}

namespace
{

std::string render_json(const certification_report &report)
{
    std::ostringstream os;
    json_writer w(os);
    const auto &c = report.config;
    w.begin_object();
    w.key("config").begin_object();
    w.key("seed").value(c.seed);
    w.key("samples_per_check").value(static_cast<std::uint64_t>(c.samples_per_check));
    w.key("pole_exclusion_radius").value(c.pole_exclusion_radius);
    w.key("tolerance").value(c.tolerance);
    w.key("kappa_list").begin_array();
    for (const double k : c.kappa_list) {
        w.value(k);
    }
    w.end_array();
    w.end_object();
    w.key("results").begin_array();
    for (const auto &r : report.results) {
        w.begin_object();
        w.key("check_id").value(r.check_id);
        w.key("description").value(r.description);
        w.key("kappa").value(r.kappa);
        w.key("samples").value(static_cast<std::uint64_t>(r.samples));
        w.key("max_abs_residual").value(r.max_abs_residual);
        w.key("tolerance").value(r.tolerance);
        w.key("pass").value(r.pass);
        w.end_object();
    }
    w.end_array();
    w.key("overall_pass").value(report.overall_pass);
    w.end_object();
    os << '\n';
    return os.str();
}

std::string md_short(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string md_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return "inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

std::string render_markdown(const certification_report &report)
{
    std::ostringstream os;
    const auto &c = report.config;
    os << "# Certification report\n\n";
    os << "- seed: " << c.seed << "\n";
    os << "- samples per check: " << c.samples_per_check << "\n";
    os << "- pole exclusion radius: " << md_short(c.pole_exclusion_radius) << " x 2 Omega\n";
    os << "- tolerance: " << md_short(c.tolerance) << "\n";
    os << "- kappa:";
    for (const double k : c.kappa_list) {
        os << ' ' << md_short(k);
    }
    os << "\n\n";
    os << "| check | kappa | samples | max residual | tolerance | result | description |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto &r : report.results) {
        os << "| " << r.check_id << " | " << md_short(r.kappa) << " | " << r.samples << " | "
           << md_number(r.max_abs_residual) << " | " << md_number(r.tolerance) << " | "
           << (r.pass ? "PASS" : "FAIL") << " | " << r.description << " |\n";
    }
    os << "\n**Overall: " << (report.overall_pass ? "PASS" : "FAIL") << "**\n";
    return os.str();
}

}

std::string render_report(const certification_report &report, report_format format)
{
    return format == report_format::json ? render_json(report) : render_markdown(report);
}

}
