#include "hgamma/io.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

namespace hgamma {

Json to_json(const QSqrt2& v) {
    return Json{{"a", v.a().fraction_str()}, {"b", v.b().fraction_str()}};
}

QSqrt2 qsqrt2_from_json(const Json& j) {
    return QSqrt2(Rational::from_string(j.at("a").get<std::string>()),
                  Rational::from_string(j.at("b").get<std::string>()));
}

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [idx, coeff] : p.terms()) {
        const MonomialIndex mi = monomial_at(idx);
        terms.push_back(Json{{"m", mi.m}, {"n", mi.n}, {"coeff", to_json(coeff)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (const Json& term : j.at("terms")) {
        p.add_term(term.at("m").get<unsigned long>(), term.at("n").get<unsigned long>(),
                   qsqrt2_from_json(term.at("coeff")));
    }
    return p;
}

Json to_json(const OrthoPoly& op) {
    return Json{{"j", op.jk.m}, {"k", op.jk.n}, {"norm_sq", to_json(op.norm_sq)},
                {"poly", to_json(op.poly)}};
}

Json to_json(const Approximant& ap) {
    return Json{{"n", ap.n}, {"bidegree", Json::array({ap.bidegree.m, ap.bidegree.n})},
                {"poly", to_json(ap.poly)}};
}

Json to_json(const DistanceSeries& series) {
    Json entries = Json::array();
    for (const DistanceEntry& e : series.entries) {
        entries.push_back(Json{{"n", e.n}, {"degree", e.degree}, {"nu_sq", to_json(e.nu_sq)},
                               {"nu_sq_float", e.nu_sq_float}});
    }
    Json out{{"gamma", series.gamma.fraction_str()}, {"entries", std::move(entries)}};
    if (series.fitted_slope) out["fitted_slope"] = *series.fitted_slope;
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

/// Positive pure-sqrt2 part "p√2/q" with p = 1 left implicit.
std::string sqrt2_part(const Rational& b) {
    const std::string num = b.num().get_str();
    std::string s = (num == "1") ? "√2" : num + "√2";
    if (b.den() != 1) s += "/" + b.den().get_str();
    return s;
}

}  // namespace

std::string pretty_qsqrt2(const QSqrt2& v) {
    if (v.is_zero()) return "0";
    if (v.b().is_zero()) return v.a().str();
    const std::string sq = v.b().sign() > 0 ? sqrt2_part(v.b()) : "-" + sqrt2_part(-v.b());
    if (v.a().is_zero()) return sq;
    if (v.b().sign() > 0) return v.a().str() + " + " + sq;
    return v.a().str() + " - " + sqrt2_part(-v.b());
}

std::string pretty_monomial(const MonomialIndex& mi) {
    std::string s;
    if (mi.m == 1) s += "z1";
    if (mi.m > 1) s += "z1^" + std::to_string(mi.m);
    if (mi.n == 1) s += "z2";
    if (mi.n > 1) s += "z2^" + std::to_string(mi.n);
    return s;
}

namespace {

/// One rendered term without its sign: the coefficient magnitude next to the
/// monomial, parenthesized when both are present and the coefficient is not 1.
std::string pretty_term(const QSqrt2& coeff, const MonomialIndex& mi) {
    const std::string mono = pretty_monomial(mi);
    if (mono.empty()) return pretty_qsqrt2(coeff);
    if (coeff == QSqrt2(1)) return mono;
    return "(" + pretty_qsqrt2(coeff) + ")" + mono;
}

}  // namespace

std::string pretty_poly(const Poly& p, bool leading_first) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<unsigned long, QSqrt2>> terms(p.terms().begin(), p.terms().end());
    if (leading_first) std::reverse(terms.begin(), terms.end());
    std::string out;
    for (const auto& [idx, coeff] : terms) {
        const bool negative = coeff.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += pretty_term(negative ? -coeff : coeff, monomial_at(idx));
    }
    return out;
}

std::string poly_csv(const Poly& p) {
    std::string out = "m,n,a,b\n";
    for (const auto& [idx, coeff] : p.terms()) {
        const MonomialIndex mi = monomial_at(idx);
        out += std::to_string(mi.m) + "," + std::to_string(mi.n) + "," +
               coeff.a().fraction_str() + "," + coeff.b().fraction_str() + "\n";
    }
    return out;
}

std::string distance_series_csv(const DistanceSeries& series) {
    std::string out = "n,degree,nu_sq_a,nu_sq_b,nu_sq_float\n";
    for (const DistanceEntry& e : series.entries) {
        out += std::to_string(e.n) + "," + std::to_string(e.degree) + "," +
               e.nu_sq.a().fraction_str() + "," + e.nu_sq.b().fraction_str() + "," +
               format_double(e.nu_sq_float) + "\n";
    }
    if (series.fitted_slope) out += "fitted_slope," + format_double(*series.fitted_slope) + "\n";
    return out;
}

}  // namespace hgamma
