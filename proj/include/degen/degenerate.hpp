#pragma once

/**
 * @file degenerate.hpp
 * @brief Degenerate and extended degenerate Stirling numbers of the second
 * kind and the associated Bell polynomials.
 *
 * Notation used throughout:
 *
 *   (a|λ)_n               = a (a - λ) (a - 2λ) ... (a - (n-1)λ)
 *   S_{2,λ}(n,k)          = n! [t^n] (1/k!) ((1+λt)^{1/λ} - 1)^k
 *   S_{2,r}(n+r,k+r|λ)    = n! [t^n] (1/k!) (1+λt)^{r/λ} ((1+λt)^{1/λ} - 1)^k
 *   Bel^{(r)}_{n,λ}(x)    = n! [t^n] (1+λt)^{r/λ} exp(x ((1+λt)^{1/λ} - 1))
 *
 * Every quantity is a polynomial in λ, so the same code runs with λ fixed to
 * a rational (T = Rational) or kept symbolic (T = LambdaPoly).
 *
 * The extended numbers can be produced by five routes that share as little
 * code as possible, which is what makes cross-checking them meaningful:
 *
 *   series     generating-function extraction from the power-series engine
 *   thm1       double sum over S_1 and S_{2,λ} weighted by r^m λ^{n-m-l}
 *   eq17       finite binomial sum over S_{2,λ}(n, m+k)
 *   thm4       forward differences of r^m against S_1, no series involved
 *   binomial   alternating sum of degenerate falling factorials
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "classical.hpp"
#include "power_series.hpp"
#include "scalar_ring.hpp"
#include "xpolynomial.hpp"

namespace degen {

enum class Method { series, thm1, eq17, thm4, binomial };

inline constexpr std::array kAllMethods{Method::series, Method::thm1, Method::eq17, Method::thm4, Method::binomial};

inline std::string_view method_name(Method m) {
    switch (m) {
    case Method::series: return "series";
    case Method::thm1: return "thm1";
    case Method::eq17: return "eq17";
    case Method::thm4: return "thm4";
    case Method::binomial: return "binom-closed-form";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    for (Method m : kAllMethods)
        if (method_name(m) == s) return m;
    throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

template <ScalarRing T>
struct DegStirlingValue {
    T value;
    long n = 0;
    long k = 0;
    long r = 0;
    Method method = Method::series;
};

template <ScalarRing T>
struct DegBellPolynomial {
    XPolynomial<T> poly;
    long n = 0;
    long r = 0;
};

/**
 * Evaluator for one value of the deformation parameter.
 *
 * Holds memo tables, so an instance must not be shared between threads
 * without external locking; separate instances are independent.
 */
template <ScalarRing T>
class DegenerateNumbers {
public:
    explicit DegenerateNumbers(T lambda) : lambda_(std::move(lambda)) {}

    T const& lambda() const { return lambda_; }

    /// λ^e from a cached table.
    T const& lambda_pow(long e) const {
        if (e < 0) throw std::invalid_argument("negative power of lambda");
        while (static_cast<long>(lambda_pows_.size()) <= e)
            lambda_pows_.push_back(lambda_pows_.empty() ? T(Rational(1)) : lambda_pows_.back() * lambda_);
        return lambda_pows_[static_cast<std::size_t>(e)];
    }

    /// (a|λ)_n
    T deg_falling(T const& a, long n) const {
        if (n < 0) throw std::invalid_argument("deg_falling: negative n");
        T acc(Rational(1));
        for (long i = 0; i < n; ++i) acc = acc * (a - lambda_ * T(Rational(i)));
        return acc;
    }

    /// (x + shift|λ)_n expanded as a polynomial in x.
    XPolynomial<T> deg_falling_poly(T const& shift, long n) const {
        if (n < 0) throw std::invalid_argument("deg_falling_poly: negative n");
        XPolynomial<T> acc(T(Rational(1)));
        for (long i = 0; i < n; ++i) acc = acc * XPolynomial<T>::linear(shift - lambda_ * T(Rational(i)));
        return acc;
    }

    /// S_{2,λ}(n,k) by EGF extraction from ((1+λt)^{1/λ} - 1)^k / k!.
    T s2_deg(long n, long k) const {
        check_indices(n, k);
        if (k > n) throw std::out_of_range("s2_deg: k > n");
        ensure_deg_table(n);
        return deg_table_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// S_{2,λ}(n,k) = (1/k!) sum_l C(k,l) (-1)^{k-l} (l|λ)_n.
    T s2_deg_alternating(long n, long k) const {
        check_indices(n, k);
        if (k > n) throw std::out_of_range("s2_deg_alternating: k > n");
        return alternating_sum(n, k, 0);
    }

    /// S_{2,r}(n+r, k+r|λ); zero whenever n < k.
    DegStirlingValue<T> s2_ext(long n, long k, long r, Method method) const {
        return {s2_ext_value(n, k, r, method), n, k, r, method};
    }

    T const& s2_ext_value(long n, long k, long r, Method method = Method::series) const {
        if (n < 0 || k < 0 || r < 0) throw std::invalid_argument("s2_ext: negative argument");
        auto key = std::make_tuple(n, k, r, method);
        if (auto it = ext_memo_.find(key); it != ext_memo_.end()) return it->second;
        T v = compute_ext(n, k, r, method);
        return ext_memo_.emplace(key, std::move(v)).first->second;
    }

    /// Bel_{n,λ}(x) = sum_k S_{2,λ}(n,k) x^k.
    DegBellPolynomial<T> bell_deg_poly(long n) const {
        if (n < 0) throw std::invalid_argument("bell_deg_poly: negative n");
        std::vector<T> c;
        for (long k = 0; k <= n; ++k) c.push_back(s2_deg(n, k));
        return {XPolynomial<T>(std::move(c)), n, 0};
    }

    /// Bel^{(r)}_{n,λ}(x) = sum_k S_{2,r}(n+r,k+r|λ) x^k.
    DegBellPolynomial<T> bell_ext_poly(long n, long r, Method method = Method::eq17) const {
        if (n < 0 || r < 0) throw std::invalid_argument("bell_ext_poly: negative argument");
        std::vector<T> c;
        for (long k = 0; k <= n; ++k) c.push_back(s2_ext_value(n, k, r, method));
        return {XPolynomial<T>(std::move(c)), n, r};
    }

    /**
     * n-th EGF coefficient of (1+λt)^{r/λ} exp(a((1+λt)^{1/λ} - 1)) computed
     * with the series engine at the given truncation order.
     */
    T bell_series_eval(long n, long r, Rational const& a, std::size_t order) const {
        if (n < 0 || r < 0) throw std::invalid_argument("bell_series_eval: negative argument");
        if (static_cast<std::size_t>(n) > order) throw std::invalid_argument("bell_series_eval: order too small");
        auto shifted = ps_binom_lambda(T(Rational(r)), lambda_, order);
        auto bell = ps_exp(ps_degenerate_exp_m1(lambda_, order) * T(a));
        return ps_egf_coeff(shifted * bell, static_cast<std::size_t>(n));
    }

private:
    static void check_indices(long n, long k) {
        if (n < 0 || k < 0) throw std::out_of_range("degenerate stirling: negative index");
    }

    void ensure_deg_table(long n) const {
        if (static_cast<long>(deg_table_.size()) > n) return;
        auto const order = static_cast<std::size_t>(n);
        auto const e = ps_degenerate_exp_m1(lambda_, order);
        auto term = TruncatedSeries<T>::one(order);  // e^k / k!
        std::vector<std::vector<T>> table(order + 1);
        for (std::size_t m = 0; m <= order; ++m) table[m].assign(m + 1, T(Rational(0)));
        for (std::size_t k = 0; k <= order; ++k) {
            if (k > 0) term = term * e / Rational(static_cast<long>(k));
            for (std::size_t m = k; m <= order; ++m) table[m][k] = ps_egf_coeff(term, m);
        }
        deg_table_ = std::move(table);
    }

    T alternating_sum(long n, long k, long r) const {
        T acc(Rational(0));
        for (long l = 0; l <= k; ++l) {
            T term = deg_falling(T(Rational(l + r)), n) * T(binomial(k, l));
            acc = (k - l) % 2 ? acc - term : acc + term;
        }
        return acc / factorial(k);
    }

    T compute_ext(long n, long k, long r, Method method) const {
        T const zero(Rational(0));
        switch (method) {
        case Method::series: {
            auto const order = static_cast<std::size_t>(n);
            auto gf = ps_binom_lambda(T(Rational(r)), lambda_, order) *
                      ps_pow(ps_degenerate_exp_m1(lambda_, order), k);
            return ps_egf_coeff(gf, order) / factorial(k);
        }
        case Method::thm1: {
            T acc = zero;
            for (long l = k; l <= n; ++l) {
                T inner = zero;
                for (long m = 0; m <= n - l; ++m) {
                    Rational const c = s1(n - l, m) * power(Rational(r), static_cast<unsigned long>(m));
                    if (c.is_zero()) continue;
                    inner = inner + lambda_pow(n - m - l) * T(c);
                }
                acc = acc + inner * s2_deg(l, k) * T(binomial(n, l));
            }
            return acc;
        }
        case Method::eq17: {
            T acc = zero;
            for (long m = 0; m <= n - k; ++m) {
                Rational const c = binomial(m + k, m) * binomial(r, m) * factorial(m);
                if (c.is_zero()) continue;
                acc = acc + s2_deg(n, m + k) * T(c);
            }
            return acc;
        }
        case Method::thm4: {
            T acc = zero;
            for (long m = 0; m <= n; ++m) {
                Rational const c = s1(n, m) * forward_diff(k, m, Rational(r));
                if (c.is_zero()) continue;
                acc = acc + lambda_pow(n - m) * T(c);
            }
            return acc / factorial(k);
        }
        case Method::binomial:
            return alternating_sum(n, k, r);
        }
        throw std::invalid_argument("s2_ext: unknown method");
    }

    T lambda_;
    mutable std::vector<T> lambda_pows_;
    mutable std::vector<std::vector<T>> deg_table_;
    mutable std::map<std::tuple<long, long, long, Method>, T> ext_memo_;
};

// Dobinski-type numeric evaluation ------------------------------------------

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline HighPrecision to_high_precision(Rational const& q) {
    HighPrecision num(q.numerator().get_str());
    HighPrecision den(q.denominator().get_str());
    return num / den;
}

enum class DobinskiForm {
    /// e^{-a} sum_m λ^{n-m} S_1(n,m) sum_k a^k (k+r)^m / k!
    stirling,
    /// e^{-a} sum_k (k+r|λ)_n a^k / k!
    falling,
};

struct DobinskiResult {
    HighPrecision value;
    long terms = 0;          ///< number of k-terms summed
    double error_bound = 0;  ///< rigorous bound on |value - exact|

    double approx() const { return value.convert_to<double>(); }
};

/**
 * Truncates the infinite k-sum of a Dobinski-type series so that the
 * discarded tail is provably below tol/2.
 *
 * Each k-term is bounded by u_k = a^k max(1, (k+c)^n) / k!, where c = r for
 * the Stirling form and c = r + (n-1)|λ| for the falling form. Once the
 * ratio bound a/(K+1) (1 + 1/(K+c))^n drops to 1/2 the tail is at most
 * 2 u_K, scaled by e^{-a} and by sum_m |λ^{n-m} S_1(n,m)| for the Stirling
 * form. The kept terms are summed exactly; only e^{-a} is rounded, at 50
 * significant digits.
 */
inline DobinskiResult dobinski_numeric(long n, long r, Rational const& a, Rational const& lambda, double tol,
                                       DobinskiForm form = DobinskiForm::stirling) {
    if (n < 0 || r < 0) throw std::invalid_argument("dobinski: negative argument");
    if (a.sign() <= 0) throw std::invalid_argument("dobinski: x must be positive");
    if (!(tol > 0)) throw std::invalid_argument("dobinski: tolerance must be positive");

    std::vector<Rational> weights;  // λ^{n-m} S_1(n,m)
    double weight_sum = 1.0;
    if (form == DobinskiForm::stirling) {
        weight_sum = 0;
        for (long m = 0; m <= n; ++m) {
            weights.push_back(power(lambda, static_cast<unsigned long>(n - m)) * s1(n, m));
            weight_sum += abs(weights.back()).to_double();
        }
    }
    double const c = form == DobinskiForm::stirling
                         ? static_cast<double>(r)
                         : static_cast<double>(r) + static_cast<double>(std::max(0L, n - 1)) * abs(lambda).to_double();
    double const ad = a.to_double();
    double const nd = static_cast<double>(n);

    auto log_term_bound = [&](long k) {
        double const kd = static_cast<double>(k);
        return kd * std::log(ad) - std::lgamma(kd + 1) + nd * std::max(0.0, std::log(kd + c));
    };
    long K = 1;
    for (;; ++K) {
        double const kd = static_cast<double>(K);
        if (kd + c < 1) continue;
        double const ratio = ad / (kd + 1) * std::pow(1 + 1 / (kd + c), nd);
        if (ratio > 0.5) continue;
        double const bound = std::exp(-ad) * weight_sum * 2 * std::exp(log_term_bound(K));
        if (bound < tol / 2) break;
        if (K > 100000) throw std::runtime_error("dobinski: truncation search did not converge");
    }

    Rational exact(0);
    Rational a_pow(1), fact(1);
    for (long k = 0; k < K; ++k) {
        if (k > 0) {
            a_pow *= a;
            fact *= Rational(k);
        }
        Rational const scale = a_pow / fact;
        if (form == DobinskiForm::stirling) {
            Rational base(k + r), inner(0), p(1);
            for (long m = 0; m <= n; ++m) {
                inner += weights[static_cast<std::size_t>(m)] * p;
                p *= base;
            }
            exact += inner * scale;
        } else {
            Rational ff(1);
            for (long i = 0; i < n; ++i) ff *= Rational(k + r) - lambda * Rational(i);
            exact += ff * scale;
        }
    }

    DobinskiResult res;
    res.value = boost::multiprecision::exp(-to_high_precision(a)) * to_high_precision(exact);
    res.terms = K;
    res.error_bound = std::exp(-ad) * weight_sum * 2 * std::exp(log_term_bound(K));
    return res;
}

}  // namespace degen
