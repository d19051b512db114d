#pragma once

/**
 * @file scalar_ring.hpp
 * @brief The scalar-ring contract every generic routine is written against.
 *
 * A scalar ring is a commutative Q-algebra with exact equality. Two models
 * ship with the library:
 *
 *   - Rational, with the deformation parameter bound to a fixed rational;
 *   - LambdaPoly, with the deformation parameter left as the indeterminate.
 *
 * Generic code receives the parameter as a ring element (`lambda`) and never
 * needs to know which model it is running in.
 */

#include <concepts>

#include "lambda_poly.hpp"
#include "rational.hpp"

namespace degen {

template <typename T>
concept ScalarRing = std::regular<T> && requires(T a, T b, Rational q) {
    { T(q) } -> std::same_as<T>;
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { -a } -> std::same_as<T>;
    { a / q } -> std::same_as<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

static_assert(ScalarRing<Rational>);
static_assert(ScalarRing<LambdaPoly>);

/// Repeated squaring; power(x, 0) == 1 including x == 0.
template <ScalarRing T>
T power(T base, unsigned long e) {
    T acc(Rational(1));
    while (e) {
        if (e & 1UL) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

template <ScalarRing T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr bool symbolic = false;
    static Rational at_lambda(Rational const& v, Rational const&) { return v; }
};

template <>
struct ring_traits<LambdaPoly> {
    static constexpr bool symbolic = true;
    static Rational at_lambda(LambdaPoly const& v, Rational const& a) { return v.eval(a); }
};

/// Specializes a ring element to a concrete parameter value.
template <ScalarRing T>
Rational at_lambda(T const& v, Rational const& a) {
    return ring_traits<T>::at_lambda(v, a);
}

}  // namespace degen
