#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON encodings of scalars, polynomials and series.
 *
 *   Rational          "p/q", or "p" when q == 1
 *   LambdaPoly        ["c0","c1",...]  coefficient of λ^i at index i
 *   XPolynomial<T>    [enc(c0), enc(c1), ...]  coefficient of x^k at index k
 *   TruncatedSeries   [enc(c0), enc(c1), ...]  coefficient of t^n at index n
 *
 * The zero LambdaPoly and the zero XPolynomial encode as [].
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "lambda_poly.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "xpolynomial.hpp"

namespace degen {

using json = nlohmann::ordered_json;

inline json encode(Rational const& r) { return r.to_string(); }

inline json encode(LambdaPoly const& p) {
    json arr = json::array();
    for (auto const& c : p.coefficients()) arr.push_back(c.to_string());
    return arr;
}

template <ScalarRing T>
json encode(XPolynomial<T> const& p) {
    json arr = json::array();
    for (auto const& c : p.coefficients()) arr.push_back(encode(c));
    return arr;
}

template <ScalarRing T>
json encode(TruncatedSeries<T> const& s) {
    json arr = json::array();
    for (auto const& c : s.coefficients()) arr.push_back(encode(c));
    return arr;
}

inline Rational decode_rational(json const& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

inline LambdaPoly decode_lambda_poly(json const& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array, got " + j.dump());
    std::vector<Rational> c;
    for (auto const& e : j) c.push_back(decode_rational(e));
    return LambdaPoly(std::move(c));
}

}  // namespace degen
