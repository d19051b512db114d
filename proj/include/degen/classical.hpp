#pragma once

/**
 * @file classical.hpp
 * @brief Classical Stirling numbers, r-Stirling numbers, Bell polynomials,
 * forward differences, and a brute-force set-partition counter.
 *
 * Stirling numbers of the first kind are signed: (x)_n = sum_k s1(n,k) x^k.
 */

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "scalar_ring.hpp"
#include "xpolynomial.hpp"

namespace degen {

enum class StirlingKind { first_signed, second };

/// Row-by-row triangle of Stirling numbers, 0 <= k <= n <= n_max.
class StirlingTriangle {
public:
    explicit StirlingTriangle(StirlingKind kind, long n_max = 0) : kind_(kind) { extend(n_max); }

    StirlingKind kind() const { return kind_; }
    long n_max() const { return static_cast<long>(rows_.size()) - 1; }

    void extend(long n_max) {
        if (rows_.empty()) rows_.push_back({Rational(1)});
        while (static_cast<long>(rows_.size()) <= n_max) {
            long const n = static_cast<long>(rows_.size());
            auto const& prev = rows_.back();
            std::vector<Rational> row(static_cast<std::size_t>(n) + 1, Rational(0));
            for (long k = 1; k <= n; ++k) {
                Rational const up_left = prev[static_cast<std::size_t>(k - 1)];
                Rational const up = k < n ? prev[static_cast<std::size_t>(k)] : Rational(0);
                // s1(n,k) = s1(n-1,k-1) - (n-1) s1(n-1,k);  s2(n,k) = s2(n-1,k-1) + k s2(n-1,k)
                Rational const weight = kind_ == StirlingKind::first_signed ? Rational(-(n - 1)) : Rational(k);
                row[static_cast<std::size_t>(k)] = up_left + weight * up;
            }
            rows_.push_back(std::move(row));
        }
    }

    Rational const& at(long n, long k) const {
        if (n < 0 || k < 0 || k > n) throw std::out_of_range(index_message(n, k));
        if (n > n_max()) throw std::out_of_range("stirling triangle not built to n=" + std::to_string(n));
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    static std::string index_message(long n, long k) {
        return "stirling index out of range: (" + std::to_string(n) + ", " + std::to_string(k) + ")";
    }

    StirlingKind kind_;
    std::vector<std::vector<Rational>> rows_;
};

namespace detail {

inline Rational stirling_lookup(StirlingKind kind, long n, long k) {
    static std::mutex mu;
    static StirlingTriangle first(StirlingKind::first_signed), second(StirlingKind::second);
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("stirling index out of range: (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    std::lock_guard lock(mu);
    auto& tri = kind == StirlingKind::first_signed ? first : second;
    if (n > tri.n_max()) tri.extend(n);
    return tri.at(n, k);
}

}  // namespace detail

/// Signed Stirling number of the first kind.
inline Rational s1(long n, long k) { return detail::stirling_lookup(StirlingKind::first_signed, n, k); }

/// Stirling number of the second kind.
inline Rational s2(long n, long k) { return detail::stirling_lookup(StirlingKind::second, n, k); }

/// r-Stirling number S_{2,r}(n+r, k+r) = sum_{l=k..n} C(n,l) r^(n-l) S_2(l,k).
inline Rational r_s2(long n, long k, long r) {
    if (n < 0 || k < 0 || r < 0) throw std::invalid_argument("r_s2: negative argument");
    if (k > n) throw std::out_of_range("r_s2: k > n");
    Rational acc(0);
    for (long l = k; l <= n; ++l)
        acc += binomial(n, l) * power(Rational(r), static_cast<unsigned long>(n - l)) * s2(l, k);
    return acc;
}

/// Re-coefficients a rational polynomial into another scalar ring.
template <ScalarRing T>
XPolynomial<T> lift(XPolynomial<Rational> const& p) {
    return p.map([](Rational const& c) { return T(c); });
}

/// Bel_n(x) = sum_k S_2(n,k) x^k.
inline XPolynomial<Rational> bell_poly(long n) {
    if (n < 0) throw std::invalid_argument("bell_poly: negative n");
    std::vector<Rational> c;
    for (long k = 0; k <= n; ++k) c.push_back(s2(n, k));
    return XPolynomial<Rational>(std::move(c));
}

/// (x)_n expanded by multiplying out x(x-1)...(x-n+1).
inline XPolynomial<Rational> falling_factorial_poly(long n) {
    if (n < 0) throw std::invalid_argument("falling_factorial_poly: negative n");
    XPolynomial<Rational> acc(Rational(1));
    for (long i = 0; i < n; ++i) acc = acc * XPolynomial<Rational>::linear(Rational(-i));
    return acc;
}

/// k-th forward difference of x^m at x = r.
inline Rational forward_diff(long k, long m, Rational const& r) {
    if (k < 0 || m < 0) throw std::invalid_argument("forward_diff: negative order");
    Rational acc(0);
    for (long l = 0; l <= k; ++l) {
        Rational term = binomial(k, l) * power(Rational(l) + r, static_cast<unsigned long>(m));
        if ((k - l) % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline constexpr long kOraclePartitionMaxR = 3;
inline constexpr long kOraclePartitionMaxSize = 11;

/**
 * Counts set partitions of {1..n+r} into k+r blocks in which the elements
 * 1..r land in distinct blocks, by walking every restricted growth string.
 */
inline std::int64_t oracle_partitions(long n, long k, long r) {
    if (n < 0 || k < 0 || r < 0) throw std::invalid_argument("oracle_partitions: negative argument");
    if (r > kOraclePartitionMaxR || n + r > kOraclePartitionMaxSize)
        throw std::invalid_argument("oracle_partitions: beyond enumeration bound (r <= 3, n + r <= 11)");
    long const size = n + r;
    long const blocks = k + r;
    std::vector<int> label(static_cast<std::size_t>(size), 0);
    std::int64_t count = 0;

    auto accept = [&](int used) {
        if (used != blocks) return false;
        for (long i = 0; i < r; ++i)
            for (long j = i + 1; j < r; ++j)
                if (label[static_cast<std::size_t>(i)] == label[static_cast<std::size_t>(j)]) return false;
        return true;
    };

    auto walk = [&](auto&& self, long pos, int used) -> void {
        if (pos == size) {
            if (accept(used)) ++count;
            return;
        }
        for (int b = 0; b <= used; ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, b == used ? used + 1 : used);
        }
    };
    walk(walk, 0, 0);
    return count;
}

}  // namespace degen
