#include <set>

#include <gtest/gtest.h>

#include "degen/verifier.hpp"

using namespace degen;

namespace {

Rational q(long n, long d = 1) { return Rational::normalize(n, d); }

Grid small_grid(long n_max, std::vector<LambdaChoice> lambdas) {
    Grid g;
    g.n_max = n_max;
    g.lambdas = std::move(lambdas);
    return g;
}

}  // namespace

TEST(Verifier, CatalogueHasSixteenDistinctEntries) {
    auto cat = list_identities();
    ASSERT_EQ(cat.size(), 16u);
    std::set<std::string_view> names;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(static_cast<std::size_t>(cat[i].id), i);
        names.insert(cat[i].name);
        EXPECT_EQ(parse_identity(cat[i].name), cat[i].id);
    }
    EXPECT_EQ(names.size(), 16u);
    EXPECT_EQ(identity_info(IdentityId::THM1).location, "Theorem 1");
    EXPECT_NE(identity_info(IdentityId::EQ27).statement.find("numeric, tolerance-based"), std::string_view::npos);
    EXPECT_TRUE(identity_info(IdentityId::EQ27).numeric);
    EXPECT_TRUE(identity_info(IdentityId::EQ10).numeric);
    EXPECT_FALSE(identity_info(IdentityId::THM6).numeric);
    EXPECT_FALSE(parse_identity("BOGUS").has_value());
}

TEST(Verifier, Thm4IncludesVanishingRegion) {
    Grid g = small_grid(6, {q(1, 2)});
    g.k_max = 8;
    auto rep = verify_identity(IdentityId::THM4, g);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checked, 4 * 7 * 9);
}

TEST(Verifier, Eq13SymbolicSmallGrid) {
    auto rep = verify_identity(IdentityId::EQ13, small_grid(2, {std::nullopt}));
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checked, 3);
}

TEST(Verifier, Thm2AtNZero) {
    Grid g = small_grid(0, {q(1, 2), q(-1, 3), std::nullopt});
    auto rep = verify_identity(IdentityId::THM2, g);
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.checked, 3 * 4);
}

TEST(Verifier, EveryIdentityPassesOnSmallGrid) {
    Grid g = small_grid(5, {q(0), q(1), q(1, 2), q(-1, 3), q(7, 5), std::nullopt});
    g.r_max = 2;
    for (auto const& info : list_identities()) {
        auto rep = verify_identity(info.id, g);
        EXPECT_TRUE(rep.passed()) << info.name << "\n" << rep.to_json().dump(1);
        EXPECT_GT(rep.checked, 0) << info.name;
    }
}

TEST(Verifier, RunSuiteOrderingAndEmptyConfig) {
    EXPECT_TRUE(run_suite(SuiteConfig{}).empty());

    SuiteConfig cfg;
    cfg.grid = small_grid(3, {q(1, 2), std::nullopt});
    cfg.ids = {IdentityId::EQ17, IdentityId::THM1, IdentityId::EQ17};
    auto reps = run_suite(cfg);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_EQ(reps[0].identity, IdentityId::THM1);
    EXPECT_EQ(reps[1].identity, IdentityId::EQ17);
}

TEST(Verifier, LimitLambdaZeroOnly) {
    SuiteConfig cfg;
    cfg.grid = small_grid(6, {std::nullopt});
    cfg.ids = {IdentityId::LIMIT_LAMBDA0};
    auto reps = run_suite(cfg);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_TRUE(reps[0].passed());
    // falling-factorial points plus (n,k,r) points
    EXPECT_EQ(reps[0].checked, 7 + 4 * 28);
}

TEST(Verifier, LimitIdentitiesSkipUnrelatedFixedLambda) {
    auto rep = verify_identity(IdentityId::LIMIT_LAMBDA1, small_grid(4, {q(1, 2)}));
    EXPECT_EQ(rep.checked, 0);
    rep = verify_identity(IdentityId::LIMIT_LAMBDA1, small_grid(4, {q(1)}));
    EXPECT_GT(rep.checked, 0);
    EXPECT_TRUE(rep.passed());
}

TEST(Verifier, GridBoundsAndErrorsCapturedBySuite) {
    Grid g = small_grid(50, {q(1, 2)});
    EXPECT_THROW(verify_identity(IdentityId::THM1, g), std::invalid_argument);
    EXPECT_THROW(verify_identity(IdentityId::THM1, small_grid(6, {q(1, 2)}), 5), std::invalid_argument);

    Grid neg_x = small_grid(3, {q(1, 2)});
    neg_x.xs = {q(-1)};
    EXPECT_THROW(verify_identity(IdentityId::EQ27, neg_x), std::invalid_argument);

    SuiteConfig cfg;
    cfg.grid = neg_x;
    cfg.ids = {IdentityId::THM3, IdentityId::EQ27};
    auto reps = run_suite(cfg);
    ASSERT_EQ(reps.size(), 2u);
    EXPECT_TRUE(reps[0].passed());  // exact series evaluation at negative x is fine
    EXPECT_EQ(reps[1].status(), "error");
    EXPECT_EQ(reps[1].to_json()["status"], "error");
}

TEST(Verifier, ReportJsonShape) {
    auto rep = verify_identity(IdentityId::EQ12, small_grid(2, {q(1, 2)}));
    auto j = rep.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"identity", "grid", "checked", "failures", "status"}));
    EXPECT_EQ(j["identity"], "EQ12");
    EXPECT_EQ(j["grid"]["lambda"], json::array({"1/2"}));
    EXPECT_TRUE(rep.to_json(true).contains("elapsed_ms"));
}

namespace {

/// The EQ11 identity read with n starting at 0: the right side is an empty sum there.
VerificationReport eq11_from_zero(long n_max) {
    VerificationReport rep;
    rep.identity = IdentityId::EQ11;
    rep.grid = small_grid(n_max, {std::nullopt});
    ReportBuilder out(rep);
    DegenerateNumbers<LambdaPoly> deg(LambdaPoly::lambda());
    for (long n = 0; n <= n_max; ++n) {
        XPolynomial<LambdaPoly> inner;
        for (long k = 1; k <= n; ++k) {
            XPolynomial<Rational> bell_sum;
            for (long j = 1; j <= k; ++j) bell_sum += bell_poly(j - 1) * binomial(k - 1, j - 1);
            inner += lift<LambdaPoly>(bell_sum) * (deg.lambda_pow(n - k) * LambdaPoly(s1(n, k)));
        }
        out.point(json{{"n", n}}, deg.bell_deg_poly(n).poly, XPolynomial<LambdaPoly>::monomial(1) * inner);
    }
    return rep;
}

}  // namespace

TEST(Verifier, Eq11FailsOnlyAtNZeroWhenReadLiterally) {
    auto rep = eq11_from_zero(6);
    EXPECT_EQ(rep.checked, 7);
    ASSERT_EQ(rep.failures.size(), 1u);
    EXPECT_EQ(rep.failures[0].params["n"], 0);
    EXPECT_EQ(rep.failures[0].left, json::array({json::array({"1"})}));
    EXPECT_EQ(rep.failures[0].right, json::array());
    EXPECT_EQ(rep.status(), "fail");
    // the same failure list on every run
    EXPECT_EQ(eq11_from_zero(6).to_json().dump(), rep.to_json().dump());
}

TEST(Verifier, NumericFailureRecordsResidual) {
    VerificationReport rep;
    ReportBuilder out(rep);
    out.numeric_point(json{{"n", 3}}, HighPrecision(5.5), q(5), 1e-9);
    out.numeric_point(json{{"n", 3}}, HighPrecision(5), q(5), 1e-9);
    EXPECT_EQ(rep.checked, 2);
    ASSERT_EQ(rep.failures.size(), 1u);
    ASSERT_TRUE(rep.failures[0].residual.has_value());
    EXPECT_DOUBLE_EQ(*rep.failures[0].residual, 0.5);
}
