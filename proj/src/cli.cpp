#include "hgamma/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hgamma/approximant.hpp"
#include "hgamma/errors.hpp"
#include "hgamma/io.hpp"
#include "hgamma/orthopoly.hpp"
#include "hgamma/verify.hpp"

namespace hgamma {

namespace {

/// Parses a "P/Q" or integer gamma string and rejects nonpositive values.
Rational parse_gamma(const std::string& s) {
    Rational gamma = Rational::from_string(s);
    if (gamma.sign() <= 0) throw std::invalid_argument("gamma must be positive");
    return gamma;
}

/// Writes to --out when given, standard output otherwise.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

std::string render_ortho(const OrthoPoly& op, const std::string& format, bool labeled) {
    if (format == "json") return to_json(op).dump() + "\n";
    if (format == "csv") {
        std::string out;
        for (const auto& [idx, coeff] : op.poly.terms()) {
            const MonomialIndex mi = monomial_at(idx);
            out += std::to_string(op.jk.m) + "," + std::to_string(op.jk.n) + "," +
                   std::to_string(mi.m) + "," + std::to_string(mi.n) + "," +
                   coeff.a().fraction_str() + "," + coeff.b().fraction_str() + "," +
                   op.norm_sq.a().fraction_str() + "," + op.norm_sq.b().fraction_str() + "\n";
        }
        return out;
    }
    std::string line;
    if (labeled)
        line += "phi(" + std::to_string(op.jk.m) + "," + std::to_string(op.jk.n) + ") = ";
    line += pretty_poly(op.poly, true) + ", ‖·‖² = " + pretty_qsqrt2(op.norm_sq) + "\n";
    return line;
}

struct OrthoArgs {
    std::string gamma;
    unsigned long j = 0, k = 0, max_degree = 0;
    bool has_j = false, has_k = false, has_max_degree = false;
    std::string format = "json";
    std::string out;
};

int run_ortho(const OrthoArgs& args) {
    const bool single = args.has_j || args.has_k;
    if (single && args.has_max_degree) {
        std::cerr << "give either --j/--k or --max-degree, not both\n";
        return 2;
    }
    if (single && !(args.has_j && args.has_k)) {
        std::cerr << "--j and --k must be given together\n";
        return 2;
    }
    if (!single && !args.has_max_degree) {
        std::cerr << "one of --j/--k or --max-degree is required\n";
        return 2;
    }
    const Rational gamma = parse_gamma(args.gamma);
    std::string text;
    if (args.format == "csv") text += "j,k,m,n,a,b,norm_sq_a,norm_sq_b\n";
    if (single) {
        text += render_ortho(orthopoly_closed_form(gamma, args.j, args.k), args.format, false);
    } else {
        for (unsigned long idx = 0; idx <= index_of(0, args.max_degree); ++idx) {
            const MonomialIndex mi = monomial_at(idx);
            text += render_ortho(orthopoly_closed_form(gamma, mi.m, mi.n), args.format, true);
        }
    }
    emit(args.out, text);
    return 0;
}

struct ApproxArgs {
    std::string gamma;
    unsigned long n = 0;
    std::string format = "json";
    std::string out;
};

int run_approx(const ApproxArgs& args) {
    const Rational gamma = parse_gamma(args.gamma);
    std::string text;
    if (args.format == "csv") text += "order,m,n,a,b\n";
    for (unsigned long order = 0; order <= args.n; ++order) {
        const Approximant ap = optimal_approximant(gamma, order);
        if (args.format == "json") {
            text += to_json(ap).dump() + "\n";
        } else if (args.format == "csv") {
            for (const auto& [idx, coeff] : ap.poly.terms()) {
                const MonomialIndex mi = monomial_at(idx);
                text += std::to_string(order) + "," + std::to_string(mi.m) + "," +
                        std::to_string(mi.n) + "," + coeff.a().fraction_str() + "," +
                        coeff.b().fraction_str() + "\n";
            }
        } else {
            text += "p" + std::to_string(order) + "* = " + pretty_poly(ap.poly, false) + "\n";
        }
    }
    emit(args.out, text);
    return 0;
}

struct DistArgs {
    std::string gamma;
    unsigned long max_degree = 0;
    std::vector<unsigned long> fit;
    std::string format = "csv";
    std::string out;
};

int run_dist(const DistArgs& args) {
    const Rational gamma = parse_gamma(args.gamma);
    DistanceSeries series = optimal_distance_series(gamma, index_of(0, args.max_degree));
    if (!args.fit.empty()) series.fitted_slope = decay_slope(series, args.fit[0], args.fit[1]);

    std::string text;
    if (args.format == "json") {
        text = to_json(series).dump() + "\n";
    } else if (args.format == "pretty") {
        for (const DistanceEntry& e : series.entries) {
            text += "n=" + std::to_string(e.n) + " degree=" + std::to_string(e.degree) +
                    " nu_sq = " + pretty_qsqrt2(e.nu_sq) + " (" + format_double(e.nu_sq_float) +
                    ")\n";
        }
        if (series.fitted_slope)
            text += "fitted_slope = " + format_double(*series.fitted_slope) + "\n";
    } else {
        text = distance_series_csv(series);
    }
    emit(args.out, text);
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> gammas;
    std::string weight = "f";
    unsigned long max_degree = 0;
    std::string out;
};

int run_verify(const VerifyArgs& args) {
    std::vector<Rational> gammas;
    gammas.reserve(args.gammas.size());
    for (const std::string& g : args.gammas) gammas.push_back(parse_gamma(g));
    const Weight weight = args.weight == "f2" ? Weight::FSquared : Weight::F;
    if (weight == Weight::FSquared) {
        for (const Rational& g : gammas) {
            if (g != Rational(1)) {
                std::cerr << "weight f2 verification requires gamma = 1\n";
                return 2;
            }
        }
    }

    const auto results = run_identity_classes(VerifyOptions{gammas, weight, args.max_degree});
    std::string text;
    std::size_t passed = 0;
    for (const IdentityClassResult& r : results) {
        text += "identity class " + r.name + ": " + (r.pass ? "PASS" : "FAIL") +
                (r.pass ? "" : " — first counterexample: " + r.counterexample) + "\n";
        if (r.pass) ++passed;
    }
    text += std::to_string(passed) + "/" + std::to_string(results.size()) +
            " identity classes PASS\n";
    emit(args.out, text);
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Exact weighted orthogonal polynomials and optimal approximants for "
                 "f = 1 - (z1+z2)/√2 on the unit 2-ball"};
    app.require_subcommand(1);

    OrthoArgs ortho_args;
    CLI::App* ortho = app.add_subcommand("ortho", "Orthogonal polynomials and their norms");
    ortho->add_option("--gamma", ortho_args.gamma, "Space parameter, P/Q or integer")->required();
    CLI::Option* ortho_j = ortho->add_option("--j", ortho_args.j, "z1-exponent of the label");
    CLI::Option* ortho_k = ortho->add_option("--k", ortho_args.k, "z2-exponent of the label");
    CLI::Option* ortho_d = ortho->add_option("--max-degree", ortho_args.max_degree,
                                             "Emit every label with j+k up to this degree");
    ortho->add_option("--format", ortho_args.format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    ortho->add_option("--out", ortho_args.out, "Write output to a file instead of stdout");

    ApproxArgs approx_args;
    CLI::App* approx = app.add_subcommand("approx", "Optimal approximants p_0* ... p_n*");
    approx->add_option("--gamma", approx_args.gamma, "Space parameter, P/Q or integer")
        ->required();
    approx->add_option("--n", approx_args.n, "Highest approximant order")->required();
    approx->add_option("--format", approx_args.format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    approx->add_option("--out", approx_args.out, "Write output to a file instead of stdout");

    DistArgs dist_args;
    CLI::App* dist = app.add_subcommand("dist", "Optimal distance series nu^2_n");
    dist->add_option("--gamma", dist_args.gamma, "Space parameter, P/Q or integer")->required();
    dist->add_option("--max-degree", dist_args.max_degree,
                     "Include every order up to this total degree")
        ->required();
    dist->add_option("--fit", dist_args.fit, "Fit the decay slope over this degree range")
        ->expected(2);
    dist->add_option("--format", dist_args.format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    dist->add_option("--out", dist_args.out, "Write output to a file instead of stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the oracle-equivalence suite");
    verify->add_option("--gamma", verify_args.gammas, "Space parameter, repeatable")->required();
    verify->add_option("--weight", verify_args.weight, "Multiplier weight, f or f2")
        ->check(CLI::IsMember({"f", "f2"}));
    verify->add_option("--max-degree", verify_args.max_degree,
                       "Check identities up to this total degree")
        ->required();
    verify->add_option("--out", verify_args.out, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ortho_args.has_j = ortho_j->count() > 0;
    ortho_args.has_k = ortho_k->count() > 0;
    ortho_args.has_max_degree = ortho_d->count() > 0;

    try {
        if (ortho->parsed()) return run_ortho(ortho_args);
        if (approx->parsed()) return run_approx(approx_args);
        if (dist->parsed()) return run_dist(dist_args);
        return run_verify(verify_args);
    } catch (const ConventionMismatchError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const DivisionByZeroError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hgamma
