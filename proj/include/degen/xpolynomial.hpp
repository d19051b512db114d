#pragma once

/**
 * @file xpolynomial.hpp
 * @brief Polynomials in the Bell variable x with scalar-ring coefficients.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scalar_ring.hpp"

namespace degen {

template <ScalarRing T>
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(T const& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit XPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// x + c
    static XPolynomial linear(T const& c) { return XPolynomial(std::vector<T>{c, T(Rational(1))}); }

    static XPolynomial monomial(std::size_t k, T const& c = T(Rational(1))) {
        std::vector<T> v(k + 1, T(Rational(0)));
        v[k] = c;
        return XPolynomial(std::move(v));
    }

    std::vector<T> const& coefficients() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(Rational(0)); }
    bool is_zero() const { return c_.empty(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(Rational(1)); }

    T eval(T const& x) const {
        T acc(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    XPolynomial& operator+=(XPolynomial const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(Rational(0)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }

    XPolynomial& operator-=(XPolynomial const& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(Rational(0)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }

    XPolynomial& operator*=(T const& s) {
        for (auto& c : c_) c = c * s;
        trim();
        return *this;
    }

    friend XPolynomial operator+(XPolynomial a, XPolynomial const& b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, XPolynomial const& b) { return a -= b; }
    friend XPolynomial operator*(XPolynomial a, T const& s) { return a *= s; }

    friend XPolynomial operator*(XPolynomial const& a, XPolynomial const& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return XPolynomial(std::move(out));
    }

    friend bool operator==(XPolynomial const& a, XPolynomial const& b) = default;

    template <typename Fn>
    auto map(Fn&& fn) const {
        using U = decltype(fn(c_[0]));
        std::vector<U> out;
        out.reserve(c_.size());
        for (auto const& c : c_) out.push_back(fn(c));
        return XPolynomial<U>(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

/**
 * The unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
 * Newton divided differences; nodes must be pairwise distinct.
 */
template <ScalarRing T>
XPolynomial<T> interpolate(std::vector<Rational> const& nodes, std::vector<T> values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    std::size_t const n = nodes.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational const h = nodes[i] - nodes[i - level];
            if (h.is_zero()) throw std::invalid_argument("interpolate: repeated node");
            values[i] = (values[i] - values[i - 1]) / h;
        }
    XPolynomial<T> acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * XPolynomial<T>::linear(T(-nodes[i])) + XPolynomial<T>(values[i]);
    }
    return acc;
}

}  // namespace degen
