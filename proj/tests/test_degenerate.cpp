#include <map>

#include <gtest/gtest.h>

#include "degen/degenerate.hpp"

using degen::DegenerateNumbers;
using degen::LambdaPoly;
using degen::Method;
using degen::Rational;
using degen::XPolynomial;

namespace {

Rational q(long n, long d = 1) { return Rational::normalize(n, d); }
LambdaPoly lp(std::vector<Rational> c) { return LambdaPoly(std::move(c)); }
LambdaPoly const kLam = LambdaPoly::lambda();

/**
 * Test-only oracle for S_{2,r}(n+r,k+r|λ): differentiating the generating
 * function gives a(n+1,k) = a(n,k-1) + (k + r - nλ) a(n,k), a(0,0) = 1.
 * Shares no code with the library's five evaluation routes.
 */
template <typename T>
class RecurrenceOracle {
public:
    RecurrenceOracle(T lambda, long r, long n_max) : table_(n_max + 1) {
        for (long n = 0; n <= n_max; ++n) table_[n].assign(n_max + 2, T(Rational(0)));
        table_[0][0] = T(Rational(1));
        for (long n = 0; n < n_max; ++n)
            for (long k = 0; k <= n + 1 && k <= n_max; ++k) {
                T v = table_[n][k] * (T(Rational(k + r)) - lambda * T(Rational(n)));
                if (k > 0) v = v + table_[n][k - 1];
                table_[n + 1][k] = v;
            }
    }
    T const& operator()(long n, long k) const { return table_.at(n).at(k); }

private:
    std::vector<std::vector<T>> table_;
};

std::vector<Rational> const kLambdaGrid{q(0), q(1), q(1, 2), q(-1, 3), q(7, 5)};

}  // namespace

TEST(Degenerate, DegFallingExamples) {
    DegenerateNumbers<Rational> half(q(1, 2));
    EXPECT_EQ(half.deg_falling(q(3), 2), q(15, 2));
    EXPECT_EQ(half.deg_falling(q(11, 3), 0), q(1));
    DegenerateNumbers<Rational> one(q(1));
    EXPECT_EQ(one.deg_falling_poly(q(0), 2), degen::falling_factorial_poly(2));
    EXPECT_THROW(one.deg_falling(q(1), -1), std::invalid_argument);
}

TEST(Degenerate, S2DegExamples) {
    DegenerateNumbers<LambdaPoly> sym(kLam);
    EXPECT_EQ(sym.s2_deg(2, 1), lp({q(1), q(-1)}));
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(sym.s2_deg(n, n), LambdaPoly(1));
    EXPECT_EQ(sym.s2_deg(3, 2), lp({q(3), q(-3)}));
    EXPECT_THROW(sym.s2_deg(2, 3), std::out_of_range);
    EXPECT_THROW(sym.s2_deg(-1, 0), std::out_of_range);
}

TEST(Degenerate, S2DegAgreesWithAlternatingFormAndRecurrence) {
    DegenerateNumbers<LambdaPoly> sym(kLam);
    RecurrenceOracle<LambdaPoly> oracle(kLam, 0, 12);
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(sym.s2_deg(n, k), oracle(n, k)) << n << "," << k;
            EXPECT_EQ(sym.s2_deg_alternating(n, k), oracle(n, k)) << n << "," << k;
        }
}

TEST(Degenerate, S2ExtExamples) {
    for (Method m : degen::kAllMethods) {
        for (auto lv : kLambdaGrid) {
            DegenerateNumbers<Rational> fixed(lv);
            EXPECT_EQ(fixed.s2_ext(1, 0, 2, m).value, q(2)) << degen::method_name(m);
            EXPECT_EQ(fixed.s2_ext(1, 2, 5, m).value, q(0)) << degen::method_name(m);
        }
        DegenerateNumbers<LambdaPoly> sym(kLam);
        EXPECT_EQ(sym.s2_ext(2, 1, 1, m).value, lp({q(3), q(-1)})) << degen::method_name(m);
    }
    DegenerateNumbers<LambdaPoly> sym(kLam);
    EXPECT_THROW(sym.s2_ext(2, 1, -1, Method::series), std::invalid_argument);
    EXPECT_THROW(degen::parse_method("bogus"), std::invalid_argument);
    EXPECT_EQ(degen::parse_method("thm4"), Method::thm4);
}

TEST(Degenerate, S2ExtFrozenSymbolicValues) {
    // Independent symbolic series expansion of the defining generating function.
    DegenerateNumbers<LambdaPoly> sym(kLam);
    for (Method m : degen::kAllMethods) {
        EXPECT_EQ(sym.s2_ext_value(4, 2, 2, m), lp({q(55), q(-54), q(11)}));
        EXPECT_EQ(sym.s2_ext_value(5, 2, 3, m), lp({q(660), q(-970), q(420), q(-50)}));
    }
}

TEST(Degenerate, AllMethodsMatchRecurrenceOracle) {
    for (long r = 0; r <= 4; ++r) {
        RecurrenceOracle<LambdaPoly> oracle(kLam, r, 10);
        DegenerateNumbers<LambdaPoly> sym(kLam);
        for (long n = 0; n <= 10; ++n)
            for (long k = 0; k <= n; ++k)
                for (Method m : degen::kAllMethods)
                    ASSERT_EQ(sym.s2_ext_value(n, k, r, m), oracle(n, k))
                        << n << "," << k << "," << r << " " << degen::method_name(m);
    }
}

TEST(Degenerate, DegreeBoundAndLimits) {
    DegenerateNumbers<LambdaPoly> sym(kLam);
    for (long r = 0; r <= 4; ++r)
        for (long n = 0; n <= 10; ++n)
            for (long k = 0; k <= n; ++k) {
                auto const& v = sym.s2_ext_value(n, k, r);
                if (v.degree()) {
                    EXPECT_LE(*v.degree(), static_cast<std::size_t>(n - k));
                }
                EXPECT_EQ(v.eval(q(0)), degen::r_s2(n, k, r));
                // at λ = 1 the generating function collapses to (1+t)^r t^k / k!
                Rational falling_r(1);
                for (long i = 0; i < n - k; ++i) falling_r *= Rational(r - i);
                EXPECT_EQ(v.eval(q(1)), degen::binomial(n, k) * falling_r);
            }
}

TEST(Degenerate, VanishesBelowDiagonal) {
    for (auto lv : kLambdaGrid) {
        DegenerateNumbers<Rational> fixed(lv);
        for (long r = 0; r <= 3; ++r)
            for (long k = 1; k <= 12; ++k)
                for (long n = 0; n < k; ++n)
                    for (Method m : degen::kAllMethods) EXPECT_TRUE(fixed.s2_ext_value(n, k, r, m).is_zero());
    }
}

TEST(Degenerate, BellDegPolyExamples) {
    DegenerateNumbers<LambdaPoly> sym(kLam);
    EXPECT_EQ(sym.bell_deg_poly(0).poly, XPolynomial<LambdaPoly>(LambdaPoly(1)));
    auto b2 = sym.bell_deg_poly(2).poly;
    EXPECT_EQ(b2, XPolynomial<LambdaPoly>({LambdaPoly(), lp({q(1), q(-1)}), LambdaPoly(1)}));
    DegenerateNumbers<Rational> zero(q(0));
    EXPECT_EQ(zero.bell_deg_poly(2).poly, degen::bell_poly(2));
}

TEST(Degenerate, BellExtPolyExamples) {
    for (auto lv : kLambdaGrid) {
        DegenerateNumbers<Rational> fixed(lv);
        for (long r = 0; r <= 3; ++r)
            EXPECT_EQ(fixed.bell_ext_poly(1, r).poly, XPolynomial<Rational>({q(r), q(1)}));
        for (long n = 0; n <= 6; ++n) EXPECT_EQ(fixed.bell_ext_poly(n, 0).poly, fixed.bell_deg_poly(n).poly);
    }
    DegenerateNumbers<Rational> half(q(1, 2));
    EXPECT_EQ(half.bell_ext_poly(2, 1).poly, XPolynomial<Rational>({q(1, 2), q(5, 2), q(1)}));
    EXPECT_THROW(half.bell_ext_poly(2, -1), std::invalid_argument);
}

TEST(Degenerate, BellExtPolyFrozenSymbolic) {
    // Independent symbolic expansion; Bel^{(2)}_{3,λ}(x).
    DegenerateNumbers<LambdaPoly> sym(kLam);
    XPolynomial<LambdaPoly> expected({lp({q(8), q(-12), q(4)}), lp({q(19), q(-15), q(2)}), lp({q(9), q(-3)}),
                                      LambdaPoly(1)});
    for (Method m : degen::kAllMethods) EXPECT_EQ(sym.bell_ext_poly(3, 2, m).poly, expected);
    DegenerateNumbers<Rational> third(q(-1, 3));
    EXPECT_EQ(third.bell_ext_poly(4, 1).poly.eval(q(1, 2)), q(4609, 144));
}

TEST(Degenerate, BellPolynomialShape) {
    DegenerateNumbers<LambdaPoly> sym(kLam);
    for (long r = 0; r <= 3; ++r)
        for (long n = 0; n <= 8; ++n) {
            auto p = sym.bell_ext_poly(n, r).poly;
            EXPECT_EQ(p.degree(), static_cast<std::size_t>(n));
            EXPECT_TRUE(p.is_monic());
            EXPECT_EQ(p.coeff(0), sym.deg_falling(LambdaPoly(r), n));
        }
}

TEST(Degenerate, BellSeriesEvalExamples) {
    DegenerateNumbers<Rational> half(q(1, 2));
    for (long r = 0; r <= 3; ++r) EXPECT_EQ(half.bell_series_eval(0, r, q(5, 7), 0), q(1));
    EXPECT_EQ(half.bell_series_eval(2, 0, q(1), 2), q(3, 2));
    EXPECT_EQ(half.bell_series_eval(2, 1, q(2), 2), q(19, 2));
    EXPECT_EQ(half.bell_series_eval(2, 1, q(2), 7), q(19, 2));
    EXPECT_THROW(half.bell_series_eval(3, 1, q(2), 2), std::invalid_argument);
}

TEST(Degenerate, BellSeriesMatchesPolynomial) {
    for (auto lv : {q(1, 2), q(-1, 3)}) {
        DegenerateNumbers<Rational> fixed(lv);
        for (long r = 0; r <= 3; ++r)
            for (long n = 0; n <= 10; ++n)
                for (auto a : {q(1, 2), q(1), q(2), q(-1)})
                    EXPECT_EQ(fixed.bell_series_eval(n, r, a, static_cast<std::size_t>(n)),
                              fixed.bell_ext_poly(n, r).poly.eval(a));
    }
}

TEST(Degenerate, DobinskiExamples) {
    auto five = degen::dobinski_numeric(3, 0, q(1), q(0), 1e-9);
    EXPECT_NEAR(five.approx(), 5.0, 1e-9);
    for (long r = 0; r <= 2; ++r) EXPECT_NEAR(degen::dobinski_numeric(0, r, q(3, 2), q(1, 2), 1e-6).approx(), 1.0, 1e-6);
    EXPECT_NEAR(degen::dobinski_numeric(2, 0, q(1), q(1, 2), 1e-9).approx(), 1.5, 1e-9);
    EXPECT_NEAR(
        degen::dobinski_numeric(2, 0, q(1), q(1, 2), 1e-9, degen::DobinskiForm::falling).approx(), 1.5, 1e-9);
    EXPECT_THROW(degen::dobinski_numeric(2, 0, q(0), q(1, 2), 1e-9), std::invalid_argument);
    EXPECT_THROW(degen::dobinski_numeric(2, 0, q(-1), q(1, 2), 1e-9), std::invalid_argument);
    EXPECT_THROW(degen::dobinski_numeric(2, 0, q(1), q(1, 2), 0.0), std::invalid_argument);
}

TEST(Degenerate, DobinskiWithinToleranceOfExact) {
    for (auto lv : {q(0), q(1, 2), q(-1, 3)}) {
        DegenerateNumbers<Rational> fixed(lv);
        for (long r = 0; r <= 2; ++r)
            for (long n = 0; n <= 8; ++n)
                for (auto a : {q(1, 2), q(1), q(2)}) {
                    auto exact = degen::to_high_precision(fixed.bell_ext_poly(n, r).poly.eval(a));
                    for (auto form : {degen::DobinskiForm::stirling, degen::DobinskiForm::falling}) {
                        auto res = degen::dobinski_numeric(n, r, a, lv, 1e-9, form);
                        EXPECT_LT(abs(res.value - exact), 1e-9);
                        EXPECT_LT(res.error_bound, 0.5e-9);
                    }
                }
    }
}
