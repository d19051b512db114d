#pragma once

/**
 * @file verifier.hpp
 * @brief Grid-driven verification of the Stirling/Bell identity catalogue.
 *
 * Each identity is checked by evaluating its two (or three) sides through
 * separate code paths at every point of a parameter grid: generating-function
 * extraction on one side, closed-form finite sums on the other. All exact
 * identities compare ring elements or polynomials for literal equality; the
 * two Dobinski-type identities are infinite series and are compared against
 * the exact value within a tolerance.
 *
 * Every identity runs once per entry of the grid's λ list; the entry
 * "symbolic" runs the same checks with λ kept as an indeterminate.
 */

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "classical.hpp"
#include "degenerate.hpp"
#include "io.hpp"

namespace degen {

enum class IdentityId {
    THM1,
    THM2,
    THM3,
    THM4,
    THM5,
    THM6,
    EQ10,
    EQ11,
    EQ12,
    EQ13,
    EQ17,
    EQ24,
    EQ27,
    LIMIT_LAMBDA0,
    LIMIT_LAMBDA1,
    REMARK_BELLNUM,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view location;
    std::string_view statement;
    bool numeric;
};

inline constexpr std::array<IdentityInfo, 16> kIdentityCatalogue{{
    {IdentityId::THM1, "THM1", "Theorem 1",
     "S_{2,r}(n+r,k+r|λ) = Σ_{l=k..n} Σ_{m=0..n-l} C(n,l) r^m λ^{n-m-l} S_1(n-l,m) S_{2,λ}(l,k)", false},
    {IdentityId::THM2, "THM2", "Theorem 2",
     "(x+r|λ)_n = Σ_k S_{2,r}(n+r,k+r|λ) (x)_k = Σ_k λ^{n-k} S_1(n,k) (x+r)^k", false},
    {IdentityId::THM3, "THM3", "Theorem 3",
     "Bel^{(r)}_{n,λ}(x) = Σ_k x^k S_{2,r}(n+r,k+r|λ) = Σ_k (Σ_{m=k..n} Σ_{l=0..n-m} r^l λ^{n-m-l} "
     "S_1(n-m,l) S_{2,λ}(m,k) C(n,m)) x^k",
     false},
    {IdentityId::THM4, "THM4", "Theorem 4",
     "(1/k!) Σ_{m=0..n} λ^{n-m} S_1(n,m) Δ^k r^m = S_{2,r}(n+r,k+r|λ) for n >= k, and 0 for n < k", false},
    {IdentityId::THM5, "THM5", "Theorem 5",
     "Bel^{(r)}_{n,λ}(x) = Σ_{k=0..n} Σ_{m=0..k} C(n,k) Bel_{n-k,λ}(x) λ^{k-m} r^m S_1(k,m)", false},
    {IdentityId::THM6, "THM6", "Theorem 6",
     "C(m+k,m) S_{2,r}(n+r,m+k+r|λ) = Σ_{l=m..n-k} C(n,l) S_{2,r}(l+r,m+r|λ) S_{2,λ}(n-l,k)", false},
    {IdentityId::EQ10, "EQ10", "Eq. (10)",
     "Bel_{n,λ}(x) = e^{-x} Σ_{k>=0} (k|λ)_n x^k / k!  (numeric, tolerance-based)", true},
    {IdentityId::EQ11, "EQ11", "Eq. (11)",
     "Bel_{n,λ}(x) = x Σ_{k=1..n} Σ_{j=1..k} C(k-1,j-1) S_1(n,k) λ^{n-k} Bel_{j-1}(x), checked for n >= 1", false},
    {IdentityId::EQ12, "EQ12", "Eq. (12)",
     "Bel_{n,λ}(x) = Σ_{k=0..n} Σ_{m=0..k} S_2(k,m) S_1(n,k) λ^{n-k} x^m", false},
    {IdentityId::EQ13, "EQ13", "Eq. (13)",
     "Bel_{n,λ}(x), the EGF coefficients of e^{x((1+λt)^{1/λ}-1)}, equals Σ_k x^k S_{2,λ}(n,k)", false},
    {IdentityId::EQ17, "EQ17", "Eq. (17)",
     "S_{2,r}(n+r,k+r|λ) = Σ_{m=0..n-k} C(m+k,m) C(r,m) m! S_{2,λ}(n,m+k)", false},
    {IdentityId::EQ24, "EQ24", "Eq. (24)",
     "Bel^{(r)}_{n,λ}(x) = Σ_{m=0..n} λ^{n-m} S_1(n,m) Σ_{k=0..n} x^k Δ^k r^m / k!", false},
    {IdentityId::EQ27, "EQ27", "Eq. (27)",
     "Bel^{(r)}_{n,λ}(x) = e^{-x} Σ_{m=0..n} λ^{n-m} S_1(n,m) Σ_{k>=0} x^k (k+r)^m / k!  (numeric, "
     "tolerance-based)",
     true},
    {IdentityId::LIMIT_LAMBDA0, "LIMIT_LAMBDA0", "Note after Theorem 1",
     "S_{2,r}(n+r,k+r|λ) at λ = 0 equals the r-Stirling number S_{2,r}(n+r,k+r); (x|λ)_n at λ = 0 is x^n", false},
    {IdentityId::LIMIT_LAMBDA1, "LIMIT_LAMBDA1", "Note after Eq. (7)",
     "(x|λ)_n at λ = 1 is (x)_n; S_{2,r}(n+r,k+r|λ) at λ = 1 equals C(n,k) (r)_{n-k}", false},
    {IdentityId::REMARK_BELLNUM, "REMARK_BELLNUM", "Remark after Theorem 3",
     "Bel^{(r)}_{n,λ} = Σ_k S_{2,r}(n+r,k+r|λ) = Σ_k Σ_{m=k..n} Σ_{l=0..n-m} C(n,m) r^l λ^{n-m-l} S_1(n-m,l) "
     "S_{2,λ}(m,k)",
     false},
}};

inline std::vector<IdentityInfo> list_identities() { return {kIdentityCatalogue.begin(), kIdentityCatalogue.end()}; }

inline IdentityInfo const& identity_info(IdentityId id) { return kIdentityCatalogue[static_cast<std::size_t>(id)]; }

inline std::string_view identity_name(IdentityId id) { return identity_info(id).name; }

inline std::optional<IdentityId> parse_identity(std::string_view name) {
    for (auto const& info : kIdentityCatalogue)
        if (info.name == name) return info.id;
    return std::nullopt;
}

/// A λ grid entry; std::nullopt means "symbolic".
using LambdaChoice = std::optional<Rational>;

inline std::string lambda_label(LambdaChoice const& l) { return l ? l->to_string() : "symbolic"; }

inline LambdaChoice parse_lambda_choice(std::string_view s) {
    if (s == "symbolic") return std::nullopt;
    return Rational::parse(s);
}

inline constexpr long kDefaultGridMaxN = 40;

struct Grid {
    long n_max = 10;
    /// Upper k for the vanishing check of THM4; negative means n_max + 2.
    long k_max = -1;
    long r_max = 3;
    std::vector<LambdaChoice> lambdas{Rational(0), Rational(1), Rational::normalize(1, 2),
                                      Rational::normalize(-1, 3), Rational::normalize(7, 5), std::nullopt};
    std::vector<Rational> xs{Rational::normalize(1, 2), Rational(1), Rational(2)};
    double tol = 1e-9;

    long effective_k_max() const { return k_max < 0 ? n_max + 2 : k_max; }

    /// Throws std::invalid_argument when the grid falls outside [0, max_n].
    void validate(long max_n = kDefaultGridMaxN) const {
        if (n_max < 0 || r_max < 0) throw std::invalid_argument("grid: negative bound");
        if (n_max > max_n || effective_k_max() > max_n + 2 || r_max > max_n)
            throw std::invalid_argument("grid: bound exceeds limit " + std::to_string(max_n));
        if (!(tol > 0)) throw std::invalid_argument("grid: tolerance must be positive");
    }

    json to_json() const {
        json lam = json::array(), x = json::array();
        for (auto const& l : lambdas) lam.push_back(lambda_label(l));
        for (auto const& v : xs) x.push_back(v.to_string());
        return json{{"n_max", n_max}, {"k_max", effective_k_max()}, {"r_max", r_max},
                    {"lambda", lam},  {"x", x},                    {"tol", tol}};
    }
};

struct Failure {
    json params;
    json left;
    json right;
    std::optional<double> residual;
};

struct VerificationReport {
    IdentityId identity = IdentityId::THM1;
    Grid grid;
    long checked = 0;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};
    std::optional<std::string> error;

    bool passed() const { return failures.empty() && !error; }

    std::string status() const {
        if (error) return "error";
        return failures.empty() ? "pass" : "fail";
    }

    /// Timing is opt-in so that identical runs serialize identically.
    json to_json(bool include_timing = false) const {
        json fails = json::array();
        for (auto const& f : failures) {
            json entry{{"params", f.params}, {"left", f.left}, {"right", f.right}};
            if (f.residual) entry["residual"] = *f.residual;
            fails.push_back(std::move(entry));
        }
        json j{{"identity", std::string(identity_name(identity))}, {"grid", grid.to_json()}, {"checked", checked},
               {"failures", fails}};
        if (include_timing) j["elapsed_ms"] = elapsed.count();
        j["status"] = status();
        if (error) j["error"] = *error;
        return j;
    }
};

/**
 * Accumulates grid points into a report. A point holds one reference value
 * and any number of alternative forms; it fails when any form differs.
 */
class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& report) : report_(report) {}

    template <typename V>
    void point(json params, V const& left, std::initializer_list<std::pair<std::string_view, V>> rights) {
        ++report_.checked;
        for (auto const& [form, right] : rights) {
            if (left == right) continue;
            json p = params;
            if (rights.size() > 1) p["form"] = std::string(form);
            report_.failures.push_back({std::move(p), encode(left), encode(right), std::nullopt});
        }
    }

    template <typename V>
    void point(json params, V const& left, V const& right) {
        point(std::move(params), left, {std::pair<std::string_view, V>{"", right}});
    }

    /// Tolerance comparison of a numeric approximation against an exact value.
    void numeric_point(json params, HighPrecision const& approx, Rational const& exact, double tol) {
        ++report_.checked;
        HighPrecision const diff = abs(approx - to_high_precision(exact));
        if (diff <= tol) return;
        report_.failures.push_back(
            {std::move(params), approx.str(20), encode(exact), diff.convert_to<double>()});
    }

private:
    VerificationReport& report_;
};

namespace detail {

template <ScalarRing T>
struct CheckContext {
    DegenerateNumbers<T> deg;
    std::string label;
    Grid const& grid;
    ReportBuilder& out;
    LambdaChoice choice;

    T const& lambda() const { return deg.lambda(); }

    json params(std::initializer_list<std::pair<char const*, long>> ints) const {
        json p{{"lambda", label}};
        for (auto const& [key, v] : ints) p[key] = v;
        return p;
    }
};

template <ScalarRing T>
T ring(Rational const& q) {
    return T(q);
}

/// Σ_{m=k..n} Σ_{l=0..n-m} C(n,m) r^l λ^{n-m-l} S_1(n-m,l) S_{2,λ}(m,k)
template <ScalarRing T>
T double_sum_coefficient(DegenerateNumbers<T> const& deg, long n, long k, long r) {
    T acc(Rational(0));
    for (long m = k; m <= n; ++m)
        for (long l = 0; l <= n - m; ++l) {
            Rational const c = binomial(n, m) * power(Rational(r), static_cast<unsigned long>(l)) * s1(n - m, l);
            if (c.is_zero()) continue;
            acc = acc + deg.lambda_pow(n - m - l) * deg.s2_deg(m, k) * ring<T>(c);
        }
    return acc;
}

template <ScalarRing T>
XPolynomial<T> shifted_power(long r, long k) {
    XPolynomial<T> acc(T(Rational(1)));
    for (long i = 0; i < k; ++i) acc = acc * XPolynomial<T>::linear(T(Rational(r)));
    return acc;
}

template <ScalarRing T>
void check_thm1(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n)
            for (long k = 0; k <= n; ++k)
                c.out.point(c.params({{"n", n}, {"k", k}, {"r", r}}), c.deg.s2_ext_value(n, k, r, Method::series),
                            c.deg.s2_ext_value(n, k, r, Method::thm1));
}

template <ScalarRing T>
void check_thm2(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n) {
            auto const direct = c.deg.deg_falling_poly(T(Rational(r)), n);
            XPolynomial<T> via_stirling, via_powers;
            for (long k = 0; k <= n; ++k) {
                via_stirling += lift<T>(falling_factorial_poly(k)) * c.deg.s2_ext_value(n, k, r, Method::series);
                via_powers += shifted_power<T>(r, k) * (c.deg.lambda_pow(n - k) * T(s1(n, k)));
            }
            c.out.point(c.params({{"n", n}, {"r", r}}), direct,
                        {{"falling_factorial_basis", via_stirling}, {"power_basis", via_powers}});
        }
}

template <ScalarRing T>
void check_thm3(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n) {
            auto const poly = c.deg.bell_ext_poly(n, r, Method::series).poly;
            std::vector<T> coeffs;
            for (long k = 0; k <= n; ++k) coeffs.push_back(double_sum_coefficient(c.deg, n, k, r));
            c.out.point(c.params({{"n", n}, {"r", r}}), poly, XPolynomial<T>(std::move(coeffs)));
            for (auto const& a : c.grid.xs) {
                json p = c.params({{"n", n}, {"r", r}});
                p["x"] = a.to_string();
                c.out.point(std::move(p), poly.eval(T(a)),
                            c.deg.bell_series_eval(n, r, a, static_cast<std::size_t>(n)));
            }
        }
}

template <ScalarRing T>
void check_thm4(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n)
            for (long k = 0; k <= c.grid.effective_k_max(); ++k)
                c.out.point(c.params({{"n", n}, {"k", k}, {"r", r}}), c.deg.s2_ext_value(n, k, r, Method::thm4),
                            c.deg.s2_ext_value(n, k, r, Method::series));
}

template <ScalarRing T>
void check_thm5(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n) {
            XPolynomial<T> rhs;
            for (long k = 0; k <= n; ++k) {
                T weight(Rational(0));
                for (long m = 0; m <= k; ++m) {
                    Rational const coef = power(Rational(r), static_cast<unsigned long>(m)) * s1(k, m);
                    if (!coef.is_zero()) weight = weight + c.deg.lambda_pow(k - m) * T(coef);
                }
                rhs += c.deg.bell_deg_poly(n - k).poly * (weight * T(binomial(n, k)));
            }
            c.out.point(c.params({{"n", n}, {"r", r}}), c.deg.bell_ext_poly(n, r, Method::eq17).poly, rhs);
        }
}

template <ScalarRing T>
void check_thm6(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n)
            for (long m = 0; m <= n; ++m)
                for (long k = 0; m + k <= n; ++k) {
                    T const lhs = c.deg.s2_ext_value(n, m + k, r, Method::series) * T(binomial(m + k, m));
                    T rhs(Rational(0));
                    for (long l = m; l <= n - k; ++l)
                        rhs = rhs + c.deg.s2_ext_value(l, m, r, Method::thm4) * c.deg.s2_deg(n - l, k) *
                                        T(binomial(n, l));
                    c.out.point(c.params({{"n", n}, {"m", m}, {"k", k}, {"r", r}}), lhs, rhs);
                }
}

template <ScalarRing T>
void check_eq11(CheckContext<T>& c) {
    for (long n = 1; n <= c.grid.n_max; ++n) {
        XPolynomial<T> inner;
        for (long k = 1; k <= n; ++k) {
            XPolynomial<Rational> bell_sum;
            for (long j = 1; j <= k; ++j) bell_sum += bell_poly(j - 1) * binomial(k - 1, j - 1);
            inner += lift<T>(bell_sum) * (c.deg.lambda_pow(n - k) * T(s1(n, k)));
        }
        auto const rhs = XPolynomial<T>::monomial(1) * inner;
        c.out.point(c.params({{"n", n}}), c.deg.bell_deg_poly(n).poly, rhs);
    }
}

template <ScalarRing T>
void check_eq12(CheckContext<T>& c) {
    for (long n = 0; n <= c.grid.n_max; ++n) {
        XPolynomial<T> rhs;
        for (long k = 0; k <= n; ++k)
            for (long m = 0; m <= k; ++m) {
                Rational const coef = s2(k, m) * s1(n, k);
                if (!coef.is_zero())
                    rhs += XPolynomial<T>::monomial(static_cast<std::size_t>(m), c.deg.lambda_pow(n - k) * T(coef));
            }
        c.out.point(c.params({{"n", n}}), c.deg.bell_deg_poly(n).poly, rhs);
    }
}

template <ScalarRing T>
void check_eq13(CheckContext<T>& c) {
    // The generating-function side is sampled at x = 0..n and interpolated.
    for (long n = 0; n <= c.grid.n_max; ++n) {
        std::vector<Rational> nodes;
        std::vector<T> values;
        for (long j = 0; j <= n; ++j) {
            nodes.emplace_back(j);
            values.push_back(c.deg.bell_series_eval(n, 0, Rational(j), static_cast<std::size_t>(n)));
        }
        c.out.point(c.params({{"n", n}}), interpolate(nodes, std::move(values)), c.deg.bell_deg_poly(n).poly);
    }
}

template <ScalarRing T>
void check_eq17(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n)
            for (long k = 0; k <= n; ++k)
                c.out.point(c.params({{"n", n}, {"k", k}, {"r", r}}), c.deg.s2_ext_value(n, k, r, Method::series),
                            c.deg.s2_ext_value(n, k, r, Method::eq17));
}

template <ScalarRing T>
void check_eq24(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n) {
            XPolynomial<T> rhs;
            for (long m = 0; m <= n; ++m) {
                Rational const w = s1(n, m);
                if (w.is_zero()) continue;
                std::vector<Rational> inner;
                for (long k = 0; k <= n; ++k) inner.push_back(forward_diff(k, m, Rational(r)) / factorial(k));
                rhs += lift<T>(XPolynomial<Rational>(std::move(inner))) * (c.deg.lambda_pow(n - m) * T(w));
            }
            c.out.point(c.params({{"n", n}, {"r", r}}), c.deg.bell_ext_poly(n, r, Method::series).poly, rhs);
        }
}

template <ScalarRing T>
void check_limit(CheckContext<T>& c, Rational const& at) {
    bool const at_zero = at.is_zero();
    // Fixed-λ runs contribute only at the limit point itself.
    if (!ring_traits<T>::symbolic && !(c.choice && *c.choice == at)) return;
    for (long n = 0; n <= c.grid.n_max; ++n) {
        auto const falling = c.deg.deg_falling_poly(T(Rational(0)), n).map([&](T const& v) { return at_lambda(v, at); });
        auto const expected = at_zero ? XPolynomial<Rational>::monomial(static_cast<std::size_t>(n))
                                      : falling_factorial_poly(n);
        c.out.point(c.params({{"n", n}}), falling, expected);
    }
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n)
            for (long k = 0; k <= n; ++k) {
                Rational const value = at_lambda(c.deg.s2_ext_value(n, k, r, Method::series), at);
                Rational expected;
                if (at_zero) {
                    expected = r_s2(n, k, r);
                } else {
                    Rational falling_r(1);
                    for (long i = 0; i < n - k; ++i) falling_r *= Rational(r - i);
                    expected = binomial(n, k) * falling_r;
                }
                c.out.point(c.params({{"n", n}, {"k", k}, {"r", r}}), value, expected);
            }
}

template <ScalarRing T>
void check_remark(CheckContext<T>& c) {
    for (long r = 0; r <= c.grid.r_max; ++r)
        for (long n = 0; n <= c.grid.n_max; ++n) {
            T stirling_sum(Rational(0)), triple_sum(Rational(0));
            for (long k = 0; k <= n; ++k) {
                stirling_sum = stirling_sum + c.deg.s2_ext_value(n, k, r, Method::series);
                triple_sum = triple_sum + double_sum_coefficient(c.deg, n, k, r);
            }
            c.out.point(c.params({{"n", n}, {"r", r}}), stirling_sum,
                        {{"triple_sum", triple_sum},
                         {"series", c.deg.bell_series_eval(n, r, Rational(1), static_cast<std::size_t>(n))}});
        }
}

inline void check_dobinski(IdentityId id, Rational const& lambda, std::string const& label, Grid const& grid,
                           ReportBuilder& out) {
    DegenerateNumbers<Rational> deg(lambda);
    bool const eq10 = id == IdentityId::EQ10;
    long const r_max = eq10 ? 0 : grid.r_max;
    for (long r = 0; r <= r_max; ++r)
        for (long n = 0; n <= grid.n_max; ++n) {
            auto const poly = deg.bell_ext_poly(n, r).poly;
            for (auto const& a : grid.xs) {
                auto const res = dobinski_numeric(n, r, a, lambda, grid.tol,
                                                  eq10 ? DobinskiForm::falling : DobinskiForm::stirling);
                json p{{"lambda", label}, {"n", n}};
                if (!eq10) p["r"] = r;
                p["x"] = a.to_string();
                out.numeric_point(std::move(p), res.value, poly.eval(a), grid.tol);
            }
        }
}

template <ScalarRing T>
void run_exact(IdentityId id, CheckContext<T>& c) {
    switch (id) {
    case IdentityId::THM1: return check_thm1(c);
    case IdentityId::THM2: return check_thm2(c);
    case IdentityId::THM3: return check_thm3(c);
    case IdentityId::THM4: return check_thm4(c);
    case IdentityId::THM5: return check_thm5(c);
    case IdentityId::THM6: return check_thm6(c);
    case IdentityId::EQ11: return check_eq11(c);
    case IdentityId::EQ12: return check_eq12(c);
    case IdentityId::EQ13: return check_eq13(c);
    case IdentityId::EQ17: return check_eq17(c);
    case IdentityId::EQ24: return check_eq24(c);
    case IdentityId::LIMIT_LAMBDA0: return check_limit(c, Rational(0));
    case IdentityId::LIMIT_LAMBDA1: return check_limit(c, Rational(1));
    case IdentityId::REMARK_BELLNUM: return check_remark(c);
    case IdentityId::EQ10:
    case IdentityId::EQ27: break;
    }
    throw std::logic_error("numeric identity routed to exact checker");
}

}  // namespace detail

/**
 * Evaluates both sides of one identity at every grid point.
 * Throws std::invalid_argument for a grid outside `max_n` or, for the
 * Dobinski-type identities, a non-positive x.
 */
inline VerificationReport verify_identity(IdentityId id, Grid const& grid, long max_n = kDefaultGridMaxN) {
    grid.validate(max_n);
    bool const numeric = identity_info(id).numeric;
    if (numeric)
        for (auto const& a : grid.xs)
            if (a.sign() <= 0) throw std::invalid_argument("grid: Dobinski-type identities need x > 0");

    auto const start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = id;
    report.grid = grid;
    ReportBuilder out(report);
    for (auto const& choice : grid.lambdas) {
        std::string const label = lambda_label(choice);
        if (numeric) {
            if (choice) detail::check_dobinski(id, *choice, label, grid, out);
            continue;
        }
        if (choice) {
            detail::CheckContext<Rational> ctx{DegenerateNumbers<Rational>(*choice), label, grid, out, choice};
            detail::run_exact(id, ctx);
        } else {
            detail::CheckContext<LambdaPoly> ctx{DegenerateNumbers<LambdaPoly>(LambdaPoly::lambda()), label, grid,
                                                 out, choice};
            detail::run_exact(id, ctx);
        }
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

struct SuiteConfig {
    std::vector<IdentityId> ids;
    Grid grid;
    long max_n = kDefaultGridMaxN;

    static SuiteConfig all(Grid grid = {}) {
        SuiteConfig cfg;
        for (auto const& info : kIdentityCatalogue) cfg.ids.push_back(info.id);
        cfg.grid = std::move(grid);
        return cfg;
    }
};

/**
 * Runs each requested identity in catalogue order. Errors are captured in
 * the affected report instead of aborting the suite.
 */
inline std::vector<VerificationReport> run_suite(SuiteConfig const& config) {
    std::vector<IdentityId> ids = config.ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<VerificationReport> reports;
    for (IdentityId id : ids) {
        try {
            reports.push_back(verify_identity(id, config.grid, config.max_n));
        } catch (std::exception const& e) {
            VerificationReport failed;
            failed.identity = id;
            failed.grid = config.grid;
            failed.error = e.what();
            reports.push_back(std::move(failed));
        }
    }
    return reports;
}

}  // namespace degen
