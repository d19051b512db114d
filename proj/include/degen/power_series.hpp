#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series over a scalar ring.
 *
 * A series of order N stores the coefficients of t^0 .. t^N; every product
 * drops terms beyond t^N. Generating functions are read off in the
 * exponential convention: the n-th EGF coefficient is n! times the stored
 * coefficient of t^n.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar_ring.hpp"

namespace degen {

template <ScalarRing T>
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, T(Rational(0))) {}

    explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series: needs at least one coefficient");
    }

    static TruncatedSeries constant(std::size_t order, T const& c) {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }

    static TruncatedSeries one(std::size_t order) { return constant(order, T(Rational(1))); }

    /// The series t (zero when order == 0).
    static TruncatedSeries t(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = T(Rational(1));
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    std::vector<T> const& coefficients() const { return c_; }
    T const& operator[](std::size_t n) const { return c_.at(n); }
    T& operator[](std::size_t n) { return c_.at(n); }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    TruncatedSeries& operator+=(TruncatedSeries const& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }

    TruncatedSeries& operator-=(TruncatedSeries const& o) {
        require_same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }

    TruncatedSeries& operator*=(T const& s) {
        for (auto& c : c_) c = c * s;
        return *this;
    }

    TruncatedSeries& operator/=(Rational const& d) {
        for (auto& c : c_) c = c / d;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, TruncatedSeries const& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, TruncatedSeries const& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, T const& s) { return a *= s; }
    friend TruncatedSeries operator/(TruncatedSeries a, Rational const& d) { return a /= d; }

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(TruncatedSeries const& f, TruncatedSeries const& g) {
        f.require_same_order(g);
        TruncatedSeries out(f.order());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < f.c_.size(); ++j) out.c_[i + j] = out.c_[i + j] + f.c_[i] * g.c_[j];
        }
        return out;
    }

    friend bool operator==(TruncatedSeries const& a, TruncatedSeries const& b) = default;

    /// Applies `fn` to every coefficient, e.g. to specialize a symbolic series.
    template <typename Fn>
    auto map(Fn&& fn) const {
        using U = decltype(fn(c_[0]));
        std::vector<U> out;
        out.reserve(c_.size());
        for (auto const& c : c_) out.push_back(fn(c));
        return TruncatedSeries<U>(std::move(out));
    }

private:
    void require_same_order(TruncatedSeries const& o) const {
        if (o.c_.size() != c_.size())
            throw std::invalid_argument("series: order mismatch (" + std::to_string(order()) + " vs " +
                                        std::to_string(o.order()) + ")");
    }

    std::vector<T> c_;
};

template <ScalarRing T>
TruncatedSeries<T> ps_mul(TruncatedSeries<T> const& f, TruncatedSeries<T> const& g) {
    return f * g;
}

/**
 * exp(f) for f with zero constant term, via b_0 = 1 and
 * b_n = (1/n) sum_{k=1..n} k f_k b_{n-k}.
 */
template <ScalarRing T>
TruncatedSeries<T> ps_exp(TruncatedSeries<T> const& f) {
    if (!f[0].is_zero()) throw std::invalid_argument("series exp: constant term must be zero");
    std::size_t const order = f.order();
    TruncatedSeries<T> b(order);
    b[0] = T(Rational(1));
    for (std::size_t n = 1; n <= order; ++n) {
        T acc(Rational(0));
        for (std::size_t k = 1; k <= n; ++k) {
            if (f[k].is_zero()) continue;
            acc = acc + f[k] * b[n - k] * T(Rational(static_cast<long>(k)));
        }
        b[n] = acc / Rational(static_cast<long>(n));
    }
    return b;
}

/// log(1 + lambda t) / lambda, built termwise so lambda is never inverted.
template <ScalarRing T>
TruncatedSeries<T> ps_dlog(std::size_t order, T const& lambda) {
    TruncatedSeries<T> s(order);
    T lam_pow(Rational(1));
    for (std::size_t m = 1; m <= order; ++m) {
        T term = lam_pow / Rational(static_cast<long>(m));
        s[m] = (m % 2 == 1) ? term : -term;
        lam_pow = lam_pow * lambda;
    }
    return s;
}

/// (1 + lambda t)^(a / lambda); its n-th EGF coefficient is (a|lambda)_n.
template <ScalarRing T>
TruncatedSeries<T> ps_binom_lambda(T const& a, T const& lambda, std::size_t order) {
    return ps_exp(ps_dlog(order, lambda) * a);
}

/// The degenerate exponential minus one: (1 + lambda t)^(1/lambda) - 1.
template <ScalarRing T>
TruncatedSeries<T> ps_degenerate_exp_m1(T const& lambda, std::size_t order) {
    return ps_binom_lambda(T(Rational(1)), lambda, order) - TruncatedSeries<T>::one(order);
}

template <ScalarRing T>
TruncatedSeries<T> ps_pow(TruncatedSeries<T> base, long k) {
    if (k < 0) throw std::invalid_argument("series pow: negative exponent");
    auto acc = TruncatedSeries<T>::one(base.order());
    auto e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1UL) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

/// n! times the coefficient of t^n.
template <ScalarRing T>
T ps_egf_coeff(TruncatedSeries<T> const& f, std::size_t n) {
    if (n > f.order())
        throw std::out_of_range("series: coefficient " + std::to_string(n) + " beyond order " +
                                std::to_string(f.order()));
    return f[n] * T(factorial(static_cast<long>(n)));
}

}  // namespace degen
