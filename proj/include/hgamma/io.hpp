#pragma once

#include <string>

#include "json.hpp"

#include "hgamma/approximant.hpp"
#include "hgamma/orthopoly.hpp"
#include "hgamma/poly.hpp"

namespace hgamma {

// Key order is part of the output contract, so all emission goes through
// ordered_json.
using Json = nlohmann::ordered_json;

/// {"a": "p/q", "b": "r/s"} with reduced fraction strings (denominator always
/// present).
Json to_json(const QSqrt2& v);
QSqrt2 qsqrt2_from_json(const Json& j);

/// {"terms": [{"m": int, "n": int, "coeff": {...}}, ...]} in degree-lex order.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"j": int, "k": int, "norm_sq": {...}, "poly": {...}}.
Json to_json(const OrthoPoly& op);

/// {"n": int, "bidegree": [n1, n2], "poly": {...}}.
Json to_json(const Approximant& ap);

/// {"gamma": "p/q", "entries": [...], "fitted_slope": number?}.
Json to_json(const DistanceSeries& series);

/// Shortest string that round-trips through binary64 ("%.17g").
std::string format_double(double v);

/// Human-readable value using the √2 symbol: "3/2", "√2/4", "-3√2/10",
/// "1/2 + √2/4".
std::string pretty_qsqrt2(const QSqrt2& v);

/// "z1^m z2^n" without exponent 1 and with the constant monomial empty:
/// "z1", "z1^2z2", "".
std::string pretty_monomial(const MonomialIndex& mi);

/// Terms joined sign-aware ("5/6 + (√2/4)z1 + (√2/4)z2"); coefficients other
/// than ±1 are parenthesized next to a monomial. leading_first reverses to
/// the monic-leading-term display used for orthogonal polynomials.
std::string pretty_poly(const Poly& p, bool leading_first);

/// CSV with header "m,n,a,b" and reduced fraction strings.
std::string poly_csv(const Poly& p);

/// CSV with header "n,degree,nu_sq_a,nu_sq_b,nu_sq_float", one row per
/// order, and a trailing "fitted_slope,<value>" line when a fit is attached.
std::string distance_series_csv(const DistanceSeries& series);

}  // namespace hgamma
