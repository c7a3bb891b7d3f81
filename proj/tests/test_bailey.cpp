#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qrr/bailey.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;

namespace {

LaurentSeries from_list(Exp min_exp, std::vector<long> cs, Exp order) {
    std::vector<Coeff> v(cs.begin(), cs.end());
    return LaurentSeries::make(min_exp, std::move(v), order);
}

SparsePoly sp(std::vector<std::pair<Exp, long>> ts) {
    SparsePoly p;
    for (auto& [e, c] : ts) p.add(c, e);
    return p;
}

bool eq(const LaurentSeries& a, const LaurentSeries& b) { return series_equal(a, b).equal(); }

}  // namespace

TEST_CASE("alpha rules at tabulated points") {
    CHECK(alpha(BaileyPair(3, 1), 6) == sp({{0, 2}}));
    CHECK(alpha(BaileyPair(3, 1), 1) == sp({{0, -1}}));
    CHECK(alpha(BaileyPair(5, 1), 3) == sp({{2, 1}, {4, 1}}));
    for (int l = 3; l <= 9; ++l)
        for (int i = 1; i <= 2; ++i) CHECK(alpha(BaileyPair(l, i), 0) == sp({{0, 1}}));
    CHECK(alpha(BaileyPair(3, 2), 3) == sp({{-3, 1}, {3, 1}}));
    CHECK(alpha(BaileyPair(3, 1), 2) == sp({{0, -1}}));
    CHECK_THROWS_AS(alpha(BaileyPair(4, 1), -1), InvalidArgument);
}

TEST_CASE("pair construction validates level and index") {
    CHECK_THROWS_AS(BaileyPair(2, 1), InvalidLevel);
    CHECK_THROWS_AS(BaileyPair(10, 1), InvalidLevel);
    CHECK_THROWS_AS(BaileyPair(5, 3), InvalidArgument);
    CHECK_THROWS_AS(BaileyPair(5, 0), InvalidArgument);
}

TEST_CASE("unit and even pairs match their formulas") {
    CHECK(unit_pair_alpha(1) == sp({{0, -1}, {1, -1}}));
    CHECK(unit_pair_alpha(2) == sp({{1, 1}, {3, 1}}));
    CHECK(even_pair_alpha(2) == sp({{4, 2}}));
    CHECK(even_pair_alpha(3) == sp({{9, -2}}));
    CHECK(unit_pair_beta(3).is_zero());
    CHECK(eq(unit_pair_beta(0), LaurentSeries::monomial(1, 0)));
}

TEST_CASE("unit and even pairs satisfy the defining sum") {
    for (long long n = 0; n <= 10; ++n) {
        auto u = beta_from_alpha(unit_pair_alpha, n, 40);
        CHECK(eq(u, unit_pair_beta(n).truncated(40)));
        auto e = beta_from_alpha(even_pair_alpha, n, 40);
        CHECK(eq(e, even_pair_beta(n, 40)));
    }
}

TEST_CASE("definitional beta at tabulated points") {
    for (int l = 3; l <= 9; ++l)
        for (int i = 1; i <= 2; ++i)
            CHECK(eq(beta_definitional(BaileyPair(l, i), 0, 20), LaurentSeries::monomial(1, 0).truncated(20)));
    CHECK(eq(beta_definitional(BaileyPair(5, 1), 1, 10),
             from_list(0, {0, 1, 1, 2, 2, 3, 3, 4, 4, 5}, 10)));
    CHECK(eq(beta_definitional(BaileyPair(7, 1), 2, 10),
             from_list(0, {0, 0, 1, 1, 2, 3, 5, 6, 9, 11}, 10)));
}

TEST_CASE("beta has nonnegative valuation and the right constant term") {
    for (int l = 3; l <= 9; ++l)
        for (long long n = 0; n <= 8; ++n) {
            const auto& b = beta_definitional(BaileyPair(l, 1), n, 30);
            CHECK(b.min_exp() >= 0);
            if (l > 3) CHECK(b.coeff(0) == (n == 0 ? 1 : 0));
        }
    // At level 3 every alpha exponent is zero, so the constant term of beta_n
    // is the partial sum of the alpha signs: 1, 0, -1 repeating with n mod 3.
    const long expect[3] = {1, 0, -1};
    for (long long n = 0; n <= 8; ++n)
        CHECK(beta_definitional(BaileyPair(3, 1), n, 30).coeff(0) == expect[n % 3]);
}

TEST_CASE("memoized definitional beta returns a stable reference") {
    const auto* a = &beta_definitional(BaileyPair(4, 1), 5, 25);
    const auto* b = &beta_definitional(BaileyPair(4, 1), 5, 25);
    CHECK(a == b);
}

TEST_CASE("closed forms equal the definitional sum") {
    for (int l : {5, 6, 7})
        for (long long n = 0; n <= 8; ++n)
            CHECK(eq(beta_closed(BaileyPair(l, 1), n, 40),
                     beta_definitional(BaileyPair(l, 1), n, 40)));
    CHECK(eq(beta_closed(BaileyPair(6, 1), 0, 15), LaurentSeries::monomial(1, 0).truncated(15)));
    CHECK_THROWS_AS(beta_closed(BaileyPair(4, 1), 1, 20), InvalidLevel);
    CHECK_THROWS_AS(beta_closed(BaileyPair(9, 1), 1, 20), InvalidLevel);
}

TEST_CASE("closed forms for the second module index") {
    for (int l : {5, 6, 7})
        for (long long n = 0; n <= 6; ++n)
            CHECK(eq(beta_closed(BaileyPair(l, 2), n, 30),
                     beta_definitional(BaileyPair(l, 2), n, 30)));
}

TEST_CASE("sigma terms") {
    CHECK(eq(sigma(0, 0, 10), LaurentSeries::monomial(1, 0).truncated(10)));
    CHECK(sigma(2, -1, 10).is_zero());
    CHECK(sigma(1, 3, 10).is_zero());
    auto direct = invert(mul(pochhammer_fin(Monomial{1, 2}, 3, 2, kInfOrder),
                             pochhammer_fin(Monomial{1, 3}, 3, 2, kInfOrder)),
                         10);
    CHECK(eq(sigma(1, 0, 10), direct));
}

TEST_CASE("multisum representations equal the definitional sum") {
    for (int l : {3, 4, 8, 9})
        for (long long n : {0, 1, 3, 4, 6, 7}) {
            auto a = beta_multisum(BaileyPair(l, 1), BetaForm::multisum_a, n, 40);
            auto b = beta_multisum(BaileyPair(l, 1), BetaForm::multisum_b, n, 40);
            const auto& d = beta_definitional(BaileyPair(l, 1), n, 40);
            CHECK(eq(a, d));
            CHECK(eq(b, d));
            CHECK(eq(a, b));
        }
}

TEST_CASE("multisum domain errors") {
    CHECK_THROWS_AS(beta_multisum(BaileyPair(5, 1), BetaForm::multisum_a, 3, 20), InvalidLevel);
    CHECK_THROWS_AS(beta_multisum(BaileyPair(3, 1), BetaForm::multisum_a, 5, 20), InvalidResidue);
    CHECK_THROWS_AS(beta_multisum(BaileyPair(3, 1), BetaForm::closed, 3, 20), InvalidArgument);
}

TEST_CASE("multisum representations for the second module index") {
    for (int l : {3, 9})
        for (long long n : {3, 4})
            CHECK(eq(beta_multisum(BaileyPair(l, 2), BetaForm::multisum_a, n, 30),
                     beta_definitional(BaileyPair(l, 2), n, 30)));
}

TEST_CASE("recurrence-derived beta_{3m-1} equals the definitional sum") {
    for (int l = 3; l <= 9; ++l)
        for (long long m = 1; m <= 3; ++m)
            CHECK(eq(beta_3m_minus_1(BaileyPair(l, 1), m, 40),
                     beta_definitional(BaileyPair(l, 1), 3 * m - 1, 40)));
    for (long long m = 1; m <= 3; ++m)
        CHECK(eq(beta_3m_minus_1_sigma(m, 40),
                 beta_definitional(BaileyPair(3, 1), 3 * m - 1, 40)));
    CHECK(eq(beta_3m_minus_1(BaileyPair(5, 2), 1, 30),
             beta_definitional(BaileyPair(5, 2), 2, 30)));
    CHECK_THROWS_AS(beta_3m_minus_1(BaileyPair(5, 1), 0, 20), InvalidArgument);
}

TEST_CASE("the two module indices differ by a power of q") {
    for (int l = 3; l <= 9; ++l)
        for (long long n = 0; n <= 8; ++n) {
            auto b2 = beta_definitional(BaileyPair(l, 2), n, 30);
            const auto& b1 = beta_definitional(BaileyPair(l, 1), n, 30);
            CHECK(eq(shift(b2, n), b1.truncated(30)));
            CHECK(eq(beta_i2_from_i1(BaileyPair(l, 1), n, 30), b2));
        }
}

TEST_CASE("three-term relations hold") {
    for (long long n = 2; n <= 8; ++n)
        CHECK(check_recurrence(BaileyPair(3, 1), n, 40).equal());
    for (int l = 3; l <= 9; ++l)
        for (long long m = 1; m <= 3; ++m)
            CHECK(check_level_recurrence(BaileyPair(l, 1), m, 40).equal());
    CHECK(check_recurrence(BaileyPair(8, 1), 1, 40).equal());
    CHECK(check_recurrence(BaileyPair(6, 1), 2, 40).equal());
}

TEST_CASE("recurrence checks tolerate blocks starting past the window") {
    // Level 5 betas have valuation n^2, so for large m both sides of the
    // relation vanish on the whole window; that must read as equal, not as
    // an empty comparison window.
    auto rep = check_level_recurrence(BaileyPair(5, 1), 3, 80);
    CHECK(rep.equal());
    CHECK(rep.window_lo == 0);
    CHECK(rep.window_hi == 80);
    CHECK(check_level_recurrence(BaileyPair(5, 1), 5, 30).equal());
}

TEST_CASE("uniform representation dispatch") {
    CHECK(eq(beta_representation(BaileyPair(3, 1), BetaForm::recurrence, 5, 30),
             beta_definitional(BaileyPair(3, 1), 5, 30)));
    CHECK_THROWS_AS(beta_representation(BaileyPair(3, 1), BetaForm::recurrence, 4, 30),
                    InvalidResidue);
    CHECK(eq(beta_representation(BaileyPair(6, 1), BetaForm::closed, 3, 30),
             beta_definitional(BaileyPair(6, 1), 3, 30)));
    CHECK(eq(beta_representation(BaileyPair(8, 1), BetaForm::multisum_b, 6, 30),
             beta_definitional(BaileyPair(8, 1), 6, 30)));
}
