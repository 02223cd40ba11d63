#include <sigfour/certify.hpp>
#include <sigfour/cli.hpp>
#include <sigfour/errors.hpp>
#include <sigfour/hypergeom.hpp>
#include <sigfour/json_writer.hpp>
#include <sigfour/sig4.hpp>
#include <sigfour/weierstrass.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace sigfour::cli
{

namespace
{

using evaluator = std::function<complex(const sig4_context &, complex)>;

const std::vector<std::string> function_names{"rn", "rnprime", "rn2", "dn2", "cn2", "sn2sq", "wpP", "wpPprime", "wpp"};

evaluator make_evaluator(const std::string &fn, dn2_path path)
{
    static const std::map<std::string, evaluator> table{
        {"rn", [](const sig4_context &c, complex z) { return rn(c, z); }},
        {"rnprime", [](const sig4_context &c, complex z) { return rn_prime(c, z); }},
        {"rn2", [](const sig4_context &c, complex z) { return rn_squared(c, z); }},
        {"cn2", [](const sig4_context &c, complex z) { return cn2(c, z); }},
        {"sn2sq", [](const sig4_context &c, complex z) { return sn2_squared(c, z); }},
        {"wpP", [](const sig4_context &c, complex z) { return wp(c.P(), z); }},
        {"wpPprime", [](const sig4_context &c, complex z) { return wp_prime(c.P(), z); }},
        {"wpp", [](const sig4_context &c, complex z) { return wp(c.p(), z); }},
    };
    if (fn == "dn2") {
        return [path](const sig4_context &c, complex z) { return dn2(c, z, path); };
    }
    return table.at(fn);
}

dn2_path parse_path(const std::string &s)
{
    return s == "via_p" ? dn2_path::via_p : dn2_path::via_rn;
}

void write_complex(json_writer &w, complex v)
{
    w.begin_object();
    w.key("re").value(v.real());
    w.key("im").value(v.imag());
    w.end_object();
}

struct eval_args {
    std::string fn;
    double kappa = 0.;
    double re = 0.;
    double im = 0.;
    std::string path = "via_rn";
};

int do_eval(const eval_args &a, std::ostream &out)
{
    const sig4_context ctx{modulus(a.kappa)};
    const complex z(a.re, a.im);
    const complex v = make_evaluator(a.fn, parse_path(a.path))(ctx, z);
    json_writer w(out);
    w.begin_object();
    w.key("function").value(a.fn);
    w.key("kappa").value(a.kappa);
    w.key("z");
    write_complex(w, z);
    w.key("value");
    write_complex(w, v);
    w.end_object();
    out << '\n';
    return exit_ok;
}

int do_periods(double kappa, std::ostream &out)
{
    const modulus m(kappa);
    const sig4_context ctx(m);
    const double Om = ctx.Omega(), Omp = ctx.Omega_prime().imag();
    const double om = ctx.omega(), omp = ctx.omega_prime().imag();
    json_writer w(out);
    w.begin_object();
    w.key("kappa").value(kappa);
    w.key("K").value(complete_K(m));
    w.key("Omega").value(Om);
    w.key("OmegaPrimeMag").value(Omp);
    w.key("omega").value(om);
    w.key("omegaPrimeMag").value(omp);
    // Omega'/Omega = (i/sqrt2) F(1 - kappa^2)/F(kappa^2), F = F(1/4, 3/4; 1; .).
    w.key("periodRatio");
    write_complex(w, {0., f_one(1. - kappa * kappa) / (std::numbers::sqrt2 * f_one(kappa * kappa))});
    w.key("pPeriodRatio");
    write_complex(w, {0., omp / om});
    w.end_object();
    out << '\n';
    return exit_ok;
}

struct table_args {
    std::string fn;
    double kappa = 0.;
    double start = 0.;
    double end = 0.;
    std::size_t count = 0;
    std::string axis = "real";
    std::string format = "csv";
    std::string path = "via_rn";
};

int do_table(const table_args &a, std::ostream &out)
{
    const sig4_context ctx{modulus(a.kappa)};
    const evaluator f = make_evaluator(a.fn, parse_path(a.path));
    const bool imag = a.axis == "imag";

    struct row {
        double u;
        std::optional<complex> v;
    };
    std::vector<row> rows;
    rows.reserve(a.count);
    for (std::size_t i = 0; i < a.count; ++i) {
        const double u = a.count == 1 ? a.start
                         : i + 1 == a.count
                             ? a.end
                             : a.start + (a.end - a.start) * static_cast<double>(i) / static_cast<double>(a.count - 1);
        const complex z = imag ? complex(0., u) : complex(u, 0.);
        std::optional<complex> v;
        try {
            v = f(ctx, z);
            if (!std::isfinite(v->real()) || !std::isfinite(v->imag())) {
                v.reset();
            }
        } catch (const pole_error &) {
        }
        rows.push_back({u, v});
    }

    if (a.format == "csv") {
        out << "u,re,im\n";
        for (const auto &r : rows) {
            out << format_double(r.u) << ',';
            if (r.v) {
                out << format_double(r.v->real()) << ',' << format_double(r.v->imag());
            } else {
                out << ',';
            }
            out << '\n';
        }
        return exit_ok;
    }

    json_writer w(out);
    w.begin_object();
    w.key("function").value(a.fn);
    w.key("kappa").value(a.kappa);
    w.key("axis").value(a.axis);
    w.key("rows").begin_array();
    for (const auto &r : rows) {
        w.begin_object();
        w.key("u").value(r.u);
        w.key("value");
        if (r.v) {
            write_complex(w, *r.v);
        } else {
            w.null();
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    out << '\n';
    return exit_ok;
}

int do_certify(const sampling_config &config, const std::string &format, std::ostream &out)
{
    const certification_report report = certify(config);
    out << render_report(report, format == "md" ? report_format::markdown : report_format::json);
    return report.overall_pass ? exit_ok : exit_certification_failed;
}

}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Signature-four elliptic functions: evaluation, tables, periods and certification", "sigfour"};
    app.require_subcommand(1);

    eval_args ea;
    auto *eval = app.add_subcommand("eval", "Evaluate one function at a complex point (JSON)");
    eval->add_option("--fn", ea.fn, "Function name")->required()->check(CLI::IsMember(function_names));
    eval->add_option("--kappa", ea.kappa, "Modulus in (0, 1)")->required();
    eval->add_option("--re", ea.re, "Real part of z")->required();
    eval->add_option("--im", ea.im, "Imaginary part of z")->required();
    eval->add_option("--path", ea.path, "dn2 evaluation path")->check(CLI::IsMember({"via_rn", "via_p"}));

    double pk = 0.;
    auto *periods = app.add_subcommand("periods", "Print the half-periods and period ratios (JSON)");
    periods->add_option("--kappa", pk, "Modulus in (0, 1)")->required();

    table_args ta;
    auto *table = app.add_subcommand("table", "Tabulate a function along a line (CSV or JSON)");
    table->add_option("--fn", ta.fn, "Function name")->required()->check(CLI::IsMember(function_names));
    table->add_option("--kappa", ta.kappa, "Modulus in (0, 1)")->required();
    table->add_option("--start", ta.start, "First abscissa")->required();
    table->add_option("--end", ta.end, "Last abscissa")->required();
    table->add_option("--count", ta.count, "Number of rows, endpoints included")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--axis", ta.axis, "Line: z = u (real) or z = i u (imag)")
        ->check(CLI::IsMember({"real", "imag"}));
    table->add_option("--format", ta.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--path", ta.path, "dn2 evaluation path")->check(CLI::IsMember({"via_rn", "via_p"}));

    sampling_config sc;
    std::string cformat = "json";
    auto *cert = app.add_subcommand("certify", "Run the identity certifier (exit 1 on any failing check)");
    cert->add_option("--kappa", sc.kappa_list, "Comma-separated moduli")->delimiter(',');
    cert->add_option("--samples", sc.samples_per_check, "Samples per check")->check(CLI::PositiveNumber);
    cert->add_option("--seed", sc.seed, "Sampling seed");
    cert->add_option("--tol", sc.tolerance, "Analytic tolerance; finite-difference and lattice tiers scale from it");
    cert->add_option("--format", cformat, "Output format")->check(CLI::IsMember({"json", "md"}));

    // CLI11 parses in reverse order.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, d;
        const int code = app.exit(e, o, d);
        out << o.str();
        err << d.str();
        return code == 0 ? exit_ok : exit_usage;
    }

    // The payload is buffered so a failure midway leaves the success stream empty.
    std::ostringstream payload;
    try {
        int code = exit_ok;
        if (*eval) {
            code = do_eval(ea, payload);
        } else if (*periods) {
            code = do_periods(pk, payload);
        } else if (*table) {
            code = do_table(ta, payload);
        } else {
            code = do_certify(sc, cformat, payload);
        }
        out << payload.str();
        return code;
    } catch (const error &e) {
        err << "sigfour: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "sigfour: unexpected failure: " << e.what() << '\n';
    }
    return exit_usage;
}

}
