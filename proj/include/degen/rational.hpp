#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals in canonical form.
 *
 * Thin value type over GMP's mpq_class. Every constructor and arithmetic
 * result is canonicalized: positive denominator, coprime numerator and
 * denominator, zero stored as 0/1.
 */

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen {

class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(unsigned long v) : q_(v) {}
    explicit Rational(mpz_class const& z) : q_(z) {}

    /// n/d reduced to lowest terms with the sign carried by the numerator.
    Rational(mpz_class const& n, mpz_class const& d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    static Rational normalize(long long n, long long d) {
        return Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    }

    /**
     * Parses "p" or "p/q" (optional leading sign on p, q > 0, decimal digits
     * only). Anything else, including a zero denominator, throws
     * std::invalid_argument.
     */
    static Rational parse(std::string_view s) {
        auto digits = [](std::string_view d) {
            if (d.empty()) return false;
            for (char c : d)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto bad = [&] {
            return std::invalid_argument("malformed rational '" + std::string(s) + "'");
        };
        std::string_view body = s;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
        if (!digits(num) || !digits(den)) throw bad();
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw bad();
        if (!s.empty() && s.front() == '-') n = -n;
        return Rational(n, d);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    mpq_class const& mpq() const { return q_; }

    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
    Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(Rational const& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b) { return a.q_ == b.q_; }
    friend bool operator<(Rational const& a, Rational const& b) { return a.q_ < b.q_; }
    friend bool operator>(Rational const& a, Rational const& b) { return a.q_ > b.q_; }
    friend bool operator<=(Rational const& a, Rational const& b) { return a.q_ <= b.q_; }
    friend bool operator>=(Rational const& a, Rational const& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.to_string(); }

private:
    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

inline Rational abs(Rational const& r) { return r.sign() < 0 ? -r : r; }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(z);
}

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

}  // namespace degen
