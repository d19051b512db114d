#pragma once

/**
 * @file lambda_poly.hpp
 * @brief Univariate polynomials in the deformation parameter over Q.
 *
 * Coefficients are stored lowest degree first with trailing zeros stripped,
 * so the zero polynomial is the empty vector and equality is structural.
 */

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "rational.hpp"

namespace degen {

class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(int c) : LambdaPoly(Rational(c)) {}
    LambdaPoly(Rational const& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    LambdaPoly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit LambdaPoly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    /// The indeterminate itself.
    static LambdaPoly lambda() { return LambdaPoly{Rational(0), Rational(1)}; }

    std::vector<Rational> const& coefficients() const { return coeffs_; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Horner evaluation at a rational point.
    Rational eval(Rational const& a) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
        return acc;
    }

    LambdaPoly operator-() const {
        LambdaPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LambdaPoly& operator+=(LambdaPoly const& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    LambdaPoly& operator-=(LambdaPoly const& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    LambdaPoly& operator*=(LambdaPoly const& o) { return *this = *this * o; }

    /// Division by a nonzero rational constant.
    LambdaPoly& operator/=(Rational const& d) {
        if (d.is_zero()) throw std::domain_error("lambda polynomial: division by zero");
        for (auto& c : coeffs_) c /= d;
        return *this;
    }

    friend LambdaPoly operator+(LambdaPoly a, LambdaPoly const& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, LambdaPoly const& b) { return a -= b; }
    friend LambdaPoly operator/(LambdaPoly a, Rational const& d) { return a /= d; }

    friend LambdaPoly operator*(LambdaPoly const& a, LambdaPoly const& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return LambdaPoly(std::move(out));
    }

    friend bool operator==(LambdaPoly const& a, LambdaPoly const& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, LambdaPoly const& p) {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? "," : "") << '"' << p.coeffs_[i] << '"';
        return os << ']';
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace degen
