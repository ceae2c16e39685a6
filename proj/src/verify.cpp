#include "hgamma/verify.hpp"

#include "hgamma/approximant.hpp"
#include "hgamma/errors.hpp"
#include "hgamma/orthopoly.hpp"

namespace hgamma {

namespace {

std::string at(const Rational& gamma, unsigned long j, unsigned long k) {
    return "gamma=" + gamma.str() + " j=" + std::to_string(j) + " k=" + std::to_string(k);
}

IdentityClassResult check_fast_path(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"monomial-inner-fast-path", true, ""};
    const QSqrt2 a(Rational(0), Rational(1, 2));
    for (const Rational& gamma : gammas) {
        const SpaceParams params{gamma, Weight::F};
        for (unsigned long j = 0; j <= d && r.pass; ++j)
            for (unsigned long k = 0; k <= d && r.pass; ++k)
                for (unsigned long m = 0; m <= d && r.pass; ++m)
                    for (unsigned long n = 0; n <= d && r.pass; ++n) {
                        const QSqrt2 fast = monomial_weighted_inner(gamma, a, j, k, m, n);
                        const QSqrt2 ref = weighted_inner_by_expansion(
                            params, Poly::monomial(j, k), Poly::monomial(m, n));
                        if (fast != ref) {
                            r.pass = false;
                            r.counterexample = at(gamma, j, k) + " m=" + std::to_string(m) +
                                               " n=" + std::to_string(n);
                        }
                    }
    }
    return r;
}

IdentityClassResult check_closed_vs_gram_schmidt(const std::vector<Rational>& gammas,
                                                 unsigned long d) {
    IdentityClassResult r{"orthopoly-closed-form-vs-gram-schmidt", true, ""};
    const std::size_t count = (d + 1) * (d + 2) / 2;
    for (const Rational& gamma : gammas) {
        const auto oracle = gram_schmidt_oracle(SpaceParams{gamma, Weight::F}, count);
        for (const OrthoPoly& ref : oracle) {
            const OrthoPoly closed = orthopoly_closed_form(gamma, ref.jk.m, ref.jk.n);
            if (closed.poly != ref.poly || closed.norm_sq != ref.norm_sq) {
                r.pass = false;
                r.counterexample = at(gamma, ref.jk.m, ref.jk.n);
                break;
            }
        }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_recursion(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"orthopoly-recursion-vs-closed-form", true, ""};
    for (const Rational& gamma : gammas) {
        for (unsigned long j = 0; j <= d && r.pass; ++j)
            for (unsigned long k = 0; j + k <= d; ++k) {
                const OrthoPoly rec = orthopoly_recursive(gamma, j, k);
                const OrthoPoly closed = orthopoly_closed_form(gamma, j, k);
                if (rec.poly != closed.poly || rec.norm_sq != closed.norm_sq) {
                    r.pass = false;
                    r.counterexample = at(gamma, j, k);
                    break;
                }
            }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_cancellation(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"orthopoly-cancellation", true, ""};
    for (const Rational& gamma : gammas) {
        const SpaceParams params{gamma, Weight::F};
        for (unsigned long j = 0; j + 1 <= d && r.pass; ++j)
            for (unsigned long k = 1; j + k <= d; ++k) {
                const OrthoPoly phi = orthopoly_closed_form(gamma, j + 1, k - 1);
                const QSqrt2 ip =
                    weighted_inner_by_expansion(params, Poly::monomial(j, k), phi.poly);
                if (!ip.is_zero()) {
                    r.pass = false;
                    r.counterexample = at(gamma, j, k);
                    break;
                }
            }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_term_projection(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"approximant-term-projection", true, ""};
    for (const Rational& gamma : gammas) {
        for (unsigned long j = 0; j <= d && r.pass; ++j)
            for (unsigned long k = 0; j + k <= d; ++k) {
                if (!verify_term_projection(gamma, j, k)) {
                    r.pass = false;
                    r.counterexample = at(gamma, j, k);
                    break;
                }
            }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_normal_equations(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"approximant-vs-normal-equations", true, ""};
    const unsigned long n_max = index_of(0, d);
    const Poly f = weight_f();
    const Poly one = Poly::constant(QSqrt2(1));
    for (const Rational& gamma : gammas) {
        for (unsigned long n = 0; n <= n_max && r.pass; ++n) {
            const Approximant closed = optimal_approximant(gamma, n);
            const Approximant oracle = approximant_oracle(gamma, n);
            if (closed.poly != oracle.poly) {
                r.pass = false;
                r.counterexample = "gamma=" + gamma.str() + " n=" + std::to_string(n);
                break;
            }
            const Poly residual = closed.poly * f - one;
            for (unsigned long i = 0; i <= n; ++i) {
                const MonomialIndex mi = monomial_at(i);
                if (!inner(gamma, residual, f * Poly::monomial(mi.m, mi.n)).is_zero()) {
                    r.pass = false;
                    r.counterexample = "gamma=" + gamma.str() + " n=" + std::to_string(n) +
                                       " residual not orthogonal to f*chi_" + std::to_string(i);
                    break;
                }
            }
        }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_distance_series(const std::vector<Rational>& gammas, unsigned long d) {
    IdentityClassResult r{"distance-series-vs-direct-norm", true, ""};
    for (const Rational& gamma : gammas) {
        try {
            const DistanceSeries series = optimal_distance_series(gamma, index_of(0, d));
            const Rational expected_first = Rational(1) / (gamma + 1);
            if (series.entries.front().nu_sq != QSqrt2(expected_first)) {
                r.pass = false;
                r.counterexample =
                    "gamma=" + gamma.str() + " n=0: expected " + expected_first.str();
            }
        } catch (const ConventionMismatchError& e) {
            r.pass = false;
            r.counterexample = "gamma=" + gamma.str() + ": " + e.what();
        }
        if (!r.pass) break;
    }
    return r;
}

IdentityClassResult check_f2_recursion(unsigned long d) {
    IdentityClassResult r{"f2-recursion", true, ""};
    for (unsigned long j = 0; j <= d && r.pass; ++j)
        for (unsigned long k = 0; j + k <= d; ++k) {
            if (!verify_f_squared_recursion(j, k)) {
                r.pass = false;
                r.counterexample = at(Rational(1), j, k);
                break;
            }
        }
    return r;
}

}  // namespace

std::vector<IdentityClassResult> run_identity_classes(const VerifyOptions& opts) {
    std::vector<IdentityClassResult> results;
    if (opts.weight == Weight::FSquared) {
        results.push_back(check_f2_recursion(opts.max_degree));
        return results;
    }
    results.push_back(check_fast_path(opts.gammas, opts.max_degree));
    results.push_back(check_closed_vs_gram_schmidt(opts.gammas, opts.max_degree));
    results.push_back(check_recursion(opts.gammas, opts.max_degree));
    results.push_back(check_cancellation(opts.gammas, opts.max_degree));
    results.push_back(check_term_projection(opts.gammas, opts.max_degree));
    results.push_back(check_normal_equations(opts.gammas, opts.max_degree));
    results.push_back(check_distance_series(opts.gammas, opts.max_degree));
    return results;
}

}  // namespace hgamma
