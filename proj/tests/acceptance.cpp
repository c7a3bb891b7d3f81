#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qrr/bailey.hpp"
#include "qrr/identities.hpp"
#include "qrr/partitions.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;

// Full-scale verification gate.  Every case prints exactly one PASS/FAIL line
// with its wall time; doctest assertions carry the result into ctest.

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void finish(long long budget_ms = 0) {
        const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (budget_ms > 0 && ms >= budget_ms) ok = false;
        std::printf("%s %s (%lld ms)\n", ok ? "PASS" : "FAIL", name.c_str(), ms);
        std::fflush(stdout);
        CHECK_MESSAGE(ok, name);
    }
};

}  // namespace

TEST_CASE("triple and quintuple products") {
    Criterion c("triple and quintuple products for z = +-q .. +-q^4 at order 200");
    for (int sign : {1, -1})
        for (Exp a = 1; a <= 4; ++a) {
            const Monomial z{sign, a};
            c.ok &= verify_jtp(z, 200).equal();
            c.ok &= verify_qpi(z, 200).equal();
        }
    c.finish(1000);
}

TEST_CASE("beta representations") {
    Criterion c("every beta representation against the defining sum, n <= 24 at order 80");
    const Exp N = 80;
    for (long long n = 0; n <= 24; ++n) {
        c.ok &= series_equal(beta_from_alpha(unit_pair_alpha, n, N),
                             unit_pair_beta(n).truncated(N))
                    .equal();
        c.ok &= series_equal(beta_from_alpha(even_pair_alpha, n, N),
                             even_pair_beta(n, N))
                    .equal();
    }
    for (int l = 3; l <= 9; ++l)
        for (int i = 1; i <= 2; ++i) {
            const BaileyPair pair(l, i);
            for (long long n = 0; n <= 24; ++n) {
                const LaurentSeries& ref = beta_definitional(pair, n, N);
                if (l >= 5 && l <= 7)
                    c.ok &= series_equal(beta_closed(pair, n, N), ref).equal();
                if ((l == 3 || l == 4 || l == 8 || l == 9) && n % 3 != 2) {
                    c.ok &= series_equal(
                                beta_multisum(pair, BetaForm::multisum_a, n, N), ref)
                                .equal();
                    c.ok &= series_equal(
                                beta_multisum(pair, BetaForm::multisum_b, n, N), ref)
                                .equal();
                }
                if (n >= 2 && n % 3 == 2)
                    c.ok &= series_equal(beta_3m_minus_1(pair, (n + 1) / 3, N), ref)
                                .equal();
                if (i == 2)
                    c.ok &= series_equal(beta_i2_from_i1(pair, n, N), ref).equal();
            }
        }
    c.finish(30000);
}

TEST_CASE("beta recurrences") {
    Criterion c("three-term recurrences, n <= 24 and per-level m <= 8 at order 80");
    for (long long n = 2; n <= 24; ++n)
        c.ok &= check_recurrence(BaileyPair(3, 1), n, 80).equal();
    for (int l = 3; l <= 9; ++l)
        for (long long m = 1; m <= 8; ++m)
            c.ok &= check_level_recurrence(BaileyPair(l, 1), m, 80).equal();
    c.finish();
}

TEST_CASE("module characters") {
    Criterion c("four renderings of each module character agree at order 120");
    for (int l = 3; l <= 9; ++l)
        for (int i = 1; i <= 2; ++i)
            c.ok &= four_way(l, i, 120).all_equal();
    c.finish(60000);
}

TEST_CASE("sigma double sums") {
    Criterion c("sigma double sums match the three product renderings at order 100");
    for (int w = 1; w <= 2; ++w) {
        c.ok &= verify_cap_sigma(w, 100).equal();
        const LaurentSeries lhs = cap_sigma_lhs(w, 100);
        c.ok &= series_equal(lhs, grouped_lhs(3, w, 100)).equal();
        c.ok &= series_equal(lhs, a22_product(3, w, 100)).equal();
    }
    c.finish();
}

TEST_CASE("multisum identities") {
    Criterion c("multisum product identities for levels 1 through 7 at order 100");
    for (int l = 1; l <= 7; ++l)
        for (int r = 1; r <= 1 + l / 2; ++r)
            c.ok &= verify_agb(l, r, 100).equal();
    c.finish();
}

TEST_CASE("partition counts") {
    Criterion c("gap-rule partition counts match the congruence counts and series to n = 60");
    for (int which = 1; which <= 2; ++which) {
        const DifferenceRule rule =
            which == 1 ? capparelli_first_rule() : capparelli_second_rule();
        const CongruenceClass mod6 = which == 1 ? capparelli_first_distinct_mod6()
                                                : capparelli_second_distinct_mod6();
        for (long long n = 0; n <= 60; ++n) {
            const long long a = count_difference(rule, n);
            c.ok &= a == count_congruence(mod6, n);
            if (which == 1) c.ok &= a == count_congruence(capparelli_first_mod12(), n);
        }
        const LaurentSeries counted = counts_to_series(
            [&rule](long long n) { return count_difference(rule, n); }, 61);
        c.ok &= series_equal(counted, a22_product(3, which, 61)).equal();
    }
    c.finish(30000);
}

TEST_CASE("negative control") {
    Criterion c("negative control reports a mismatch at a finite exponent");
    const EqualityReport rep = verify_id("negative-control");
    c.ok &= !rep.equal();
    c.ok &= rep.first_bad_exp.has_value();
    c.finish();
}

TEST_CASE("command-line suite") {
    Criterion c("full command-line verification suite exits cleanly");
    const char* bin = std::getenv("QRR_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " verify all 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    c.ok &= WIFEXITED(status) && WEXITSTATUS(status) == 0;
    c.ok &= out.find(", 0 failed") != std::string::npos;
    c.finish(300000);
}
