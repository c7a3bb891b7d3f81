#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qrr/dsl.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;

namespace {

LaurentSeries from_list(Exp min_exp, std::vector<long> cs, Exp order) {
    std::vector<Coeff> v(cs.begin(), cs.end());
    return LaurentSeries::make(min_exp, std::move(v), order);
}

std::vector<long> partition_counts(int n) {
    std::vector<long> dp(static_cast<std::size_t>(n), 0);
    dp[0] = 1;
    for (int v = 1; v < n; ++v)
        for (int s = v; s < n; ++s) dp[static_cast<std::size_t>(s)] += dp[static_cast<std::size_t>(s - v)];
    return dp;
}

std::size_t error_position(std::string_view text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        CHECK(e.position <= text.size());
        return e.position;
    }
    FAIL("expected a ParseError for: " << std::string(text));
    return std::size_t(-1);
}

}  // namespace

TEST_CASE("single infinite factor AST") {
    ProductExpr e = parse("(q;q)_inf");
    REQUIRE(e.factors.size() == 1);
    const auto& p = std::get<PochFactor>(e.factors[0].node);
    REQUIRE(p.args.size() == 1);
    CHECK(p.args[0] == Monomial{1, 1});
    CHECK(p.base == 1);
    CHECK(p.infinite);
    CHECK(e.factors[0].power == 1);
}

TEST_CASE("division becomes a negative power") {
    ProductExpr e = parse("(q^2,q^10;q^12)_inf / (q;q)_inf");
    REQUIRE(e.factors.size() == 2);
    const auto& p0 = std::get<PochFactor>(e.factors[0].node);
    CHECK(p0.args == std::vector<Monomial>{{1, 2}, {1, 10}});
    CHECK(p0.base == 12);
    CHECK(e.factors[0].power == 1);
    CHECK(e.factors[1].power == -1);
    CHECK(parse("(q^2,q^10;q^12)_inf / (q;q)_inf") ==
          parse("(q^2,q^10;q^12)_inf * (q;q)_inf^-1"));
}

TEST_CASE("monomial factors, negative and finite indices") {
    ProductExpr e = parse("-q^3 * (q^3;q)_-2 * 1 / q^2");
    REQUIRE(e.factors.size() == 4);
    CHECK(std::get<Monomial>(e.factors[0].node) == Monomial{-1, 3});
    const auto& p = std::get<PochFactor>(e.factors[1].node);
    CHECK_FALSE(p.infinite);
    CHECK(p.index == -2);
    CHECK(std::get<Monomial>(e.factors[2].node) == Monomial{1, 0});
    CHECK(std::get<Monomial>(e.factors[3].node) == Monomial{1, 2});
    CHECK(e.factors[3].power == -1);
}

TEST_CASE("whitespace and case of inf") {
    CHECK(parse(" ( q ; q ) _ inf ") == parse("(q;q)_inf"));
    CHECK(parse("(q;q)_INF") == parse("(q;q)_inf"));
    CHECK(parse("( - q ^ 2 , 1 ; q ^ 3 )_ 4") == parse("(-q^2,1;q^3)_4"));
    CHECK(parse("q ^ - 2") == parse("q^-2"));
}

TEST_CASE("parse error positions") {
    CHECK(error_position("(q") == 2);
    CHECK(error_position("(q;;q)_inf") == 3);
    CHECK(error_position("") == 0);
    CHECK(error_position("(;q)_inf") == 1);
    CHECK(error_position("(q;q)_x") == 6);
    CHECK(error_position("(q;q)inf") == 5);
    CHECK(error_position("(q;-q)_inf") == 3);
    CHECK(error_position("(q;q^0)_inf") == 5);
    CHECK(error_position("(q;q)_inf^0") == 10);
    CHECK(error_position("(q;q)_inf *") == 11);
    CHECK(error_position("q^") == 2);
    CHECK(error_position("p") == 0);
    CHECK(error_position("q q") == 2);
    CHECK(error_position("(q,;q)_inf") == 3);
}

TEST_CASE("parse error carries expectation and found token") {
    try {
        parse("(q;;q)_inf");
        FAIL("no error thrown");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
        CHECK(e.found == "';'");
        CHECK(!e.expected.empty());
    }
    try {
        parse("(q");
        FAIL("no error thrown");
    } catch (const ParseError& e) {
        CHECK(e.found == "end of input");
    }
}

TEST_CASE("round-trip through pretty_print") {
    const char* samples[] = {
        "(q;q)_inf",
        "(q^2,q^10;q^12)_inf / (q;q)_inf",
        "(q;q)_inf^-1",
        "-q^3 * (q^3;q)_-2 * 1 / q^2",
        "(-q^2;q^2)_inf * (-q^3;q^6)_inf",
        "(q^2,q^3,q^9,q^10;q^12)_inf^-1",
        "(-1;q^3)_5 * (q;q)_2^3 / (q;q^2)_4",
        "q^-4 * (q^-1;q^2)_inf",
        "(q;q)_0",
    };
    for (const char* t : samples) {
        ProductExpr e = parse(t);
        CHECK(parse(pretty_print(e)) == e);
    }
}

TEST_CASE("pretty_print canonical text") {
    CHECK(pretty_print(parse("( q ; q )_inf")) == "(q;q)_inf");
    CHECK(pretty_print(parse("(q^2,q^10;q^12)_inf/(q;q)_inf")) ==
          "(q^2,q^10;q^12)_inf * (q;q)_inf^-1");
    CHECK(pretty_print(parse("q * (q;q)_2 / q^5")) == "q * (q;q)_2 / q^5");
}

TEST_CASE("reciprocal Euler product counts partitions") {
    auto s = evaluate("(q;q)_inf^-1", 8);
    auto expect = partition_counts(8);
    for (Exp e = 0; e < 8; ++e) CHECK(s.coeff(e) == expect[static_cast<std::size_t>(e)]);
}

TEST_CASE("two-factor product expansion to order 7") {
    auto s = evaluate("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 7);
    CHECK(series_equal(s, from_list(0, {1, 0, 1, 1, 1, 1, 2}, 7)).equal());
}

TEST_CASE("inverting the zero series is reported with the factor") {
    CHECK_THROWS_AS(evaluate("(1;q)_inf^-1", 10), NotInvertible);
    try {
        evaluate("(q;q)_inf * (1;q)_inf^-1", 10);
    } catch (const NotInvertible& e) {
        CHECK(std::string(e.what()).find("(1;q)_inf^-1") != std::string::npos);
    }
}

TEST_CASE("quotient and product displays of the same function agree") {
    auto lhs = evaluate("(q^2,q^3,q^9,q^10;q^12)_inf^-1", 60);
    auto rhs = evaluate("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 60);
    auto rep = series_equal(lhs, rhs);
    CHECK(rep.equal());
}

TEST_CASE("factor permutation leaves the value unchanged") {
    ProductExpr e = parse("q^2 * (q;q)_3 / (q;q^2)_inf * (-q^3;q^6)_inf * (q^5;q^3)_-1");
    auto ref = evaluate(e, 40);
    std::mt19937 rng(7);
    for (int t = 0; t < 6; ++t) {
        std::shuffle(e.factors.begin(), e.factors.end(), rng);
        auto s = evaluate(e, 40);
        CHECK(series_equal(s, ref).equal());
        CHECK(s.min_exp() == ref.min_exp());
        CHECK(s.order() == ref.order());
    }
}

TEST_CASE("negative argument exponents pad correctly") {
    auto lhs = evaluate("(q^-1;q^2)_inf", 5);
    auto rhs = evaluate("(q^-1;q^2)_1 * (q;q^2)_inf", 5);
    CHECK(lhs.min_exp() == -1);
    CHECK(lhs.coeff(-1) == -1);
    CHECK(series_equal(lhs, rhs).equal());

    auto sq = evaluate("(q^-2;q^3)_inf^2", 4);
    auto alt = mul(evaluate("(q^-2;q^3)_inf", 8), evaluate("(q^-2;q^3)_inf", 8)).truncated(4);
    CHECK(series_equal(sq, alt).equal());
    CHECK(sq.order() >= 4);
}

TEST_CASE("empty index and zero factors evaluate exactly") {
    auto one = evaluate("(q;q)_0", 9);
    CHECK(series_equal(one, LaurentSeries::monomial(1, 0).truncated(9)).equal());
    CHECK(evaluate("(1;q)_inf", 9).is_zero());
    CHECK(evaluate("(1;q)_3", 9).is_zero());
    CHECK(evaluate("(q;q)_inf * (1;q^2)_inf", 9).is_zero());
}

TEST_CASE("finite index through the evaluator matches the direct call") {
    auto s = evaluate("(q^3;q)_-2", 30);
    auto d = pochhammer_fin(Monomial{1, 3}, 1, -2, 30);
    CHECK(series_equal(s, d).equal());
    CHECK_THROWS_AS(evaluate("(q;q)_-1", 20), UndefinedPochhammer);
}

TEST_CASE("monomial arithmetic in the evaluator") {
    auto s = evaluate("q^5 * (q;q)_inf / q^2", 10);
    auto t = shift(evaluate("(q;q)_inf", 7), 3);
    CHECK(series_equal(s, t).equal());
    auto neg = evaluate("-q * -q^2 * -1", 6);
    CHECK(series_equal(neg, LaurentSeries::monomial(-1, 3).truncated(6)).equal());
}

TEST_CASE("evaluate rejects a nonpositive order") {
    CHECK_THROWS_AS(evaluate("(q;q)_inf", 0), InvalidArgument);
    CHECK_THROWS_AS(evaluate("(q;q)_inf", -3), InvalidArgument);
}

TEST_CASE("parse_monomial accepts exactly one monomial") {
    CHECK(parse_monomial("q^3") == Monomial{1, 3});
    CHECK(parse_monomial("-q^2") == Monomial{-1, 2});
    CHECK(parse_monomial(" - 1 ") == Monomial{-1, 0});
    CHECK(parse_monomial("q") == Monomial{1, 1});
    CHECK_THROWS_AS(parse_monomial("q^2 * q"), ParseError);
    CHECK_THROWS_AS(parse_monomial("(q;q)_inf"), ParseError);
    CHECK_THROWS_AS(parse_monomial(""), ParseError);
}
