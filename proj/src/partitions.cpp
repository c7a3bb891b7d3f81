#include "qrr/partitions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qrr/errors.hpp"

namespace qrr {

namespace {

void require_count_index(long long n) {
    if (n < 0) throw InvalidArgument("partition counts need n >= 0, got " +
                                     std::to_string(n));
}

void require_class(const CongruenceClass& cls) {
    if (cls.modulus < 1)
        throw InvalidArgument("congruence modulus must be positive, got " +
                              std::to_string(cls.modulus));
    for (int r : cls.allowed_residues)
        if (r < 0 || r >= cls.modulus)
            throw InvalidArgument("residue " + std::to_string(r) +
                                  " lies outside [0, " +
                                  std::to_string(cls.modulus) + ")");
}

bool part_allowed(const CongruenceClass& cls, long long p) {
    return cls.allowed_residues.count(static_cast<int>(p % cls.modulus)) != 0;
}

}  // namespace

DifferenceRule capparelli_first_rule() {
    return DifferenceRule{{1}, 2, {{2, {3, {1}}}, {3, {3, {0}}}}};
}

DifferenceRule capparelli_second_rule() {
    return DifferenceRule{{2}, 2, {{2, {3, {1}}}, {3, {3, {0}}}}};
}

CongruenceClass capparelli_first_distinct_mod6() {
    return CongruenceClass{6, {0, 2, 3, 4}, true};
}

CongruenceClass capparelli_first_mod12() {
    return CongruenceClass{12, {2, 3, 9, 10}, false};
}

CongruenceClass capparelli_second_distinct_mod6() {
    return CongruenceClass{6, {0, 1, 3, 5}, true};
}

long long count_difference(const DifferenceRule& rule, long long n) {
    require_count_index(n);
    if (n == 0) return 1;
    // prev starts far enough above n that the first part sees no gap rule
    const long long top = n + rule.min_gap;
    long long sentinel = top;
    if (!rule.gap_exceptions.empty())
        sentinel = std::max(sentinel, n + rule.gap_exceptions.rbegin()->first + 1);
    std::vector<std::vector<long long>> memo(
        static_cast<std::size_t>(n + 1),
        std::vector<long long>(static_cast<std::size_t>(sentinel + 1), -1));
    auto gap_ok = [&](long long prev, long long p) {
        const long long gap = prev - p;
        if (gap < rule.min_gap) return false;
        auto it = rule.gap_exceptions.find(gap);
        if (it == rule.gap_exceptions.end()) return true;
        const GapException& exc = it->second;
        return exc.larger_residues.count(static_cast<int>(prev % exc.modulus)) != 0;
    };
    std::function<long long(long long, long long)> rec = [&](long long rem,
                                                             long long prev) {
        if (rem == 0) return 1LL;
        long long& slot = memo[static_cast<std::size_t>(rem)]
                              [static_cast<std::size_t>(prev)];
        if (slot >= 0) return slot;
        long long total = 0;
        for (long long p = 1; p <= rem; ++p) {
            if (rule.forbidden_parts.count(p)) continue;
            if (!gap_ok(prev, p)) continue;
            total += rec(rem - p, p);
        }
        slot = total;
        return total;
    };
    return rec(n, sentinel);
}

long long count_congruence(const CongruenceClass& cls, long long n) {
    require_class(cls);
    require_count_index(n);
    std::vector<long long> dp(static_cast<std::size_t>(n + 1), 0);
    dp[0] = 1;
    for (long long p = 1; p <= n; ++p) {
        if (!part_allowed(cls, p)) continue;
        if (cls.distinct) {
            for (long long t = n; t >= p; --t) dp[t] += dp[t - p];
        } else {
            for (long long t = p; t <= n; ++t) dp[t] += dp[t - p];
        }
    }
    return dp[static_cast<std::size_t>(n)];
}

long long count_congruence_descent(const CongruenceClass& cls, long long n) {
    require_class(cls);
    require_count_index(n);
    if (n == 0) return 1;
    std::vector<std::vector<long long>> memo(
        static_cast<std::size_t>(n + 1),
        std::vector<long long>(static_cast<std::size_t>(n + 1), -1));
    std::function<long long(long long, long long)> rec = [&](long long rem,
                                                             long long cap) {
        if (rem == 0) return 1LL;
        if (cap <= 0) return 0LL;
        long long& slot = memo[static_cast<std::size_t>(rem)]
                              [static_cast<std::size_t>(cap)];
        if (slot >= 0) return slot;
        long long total = 0;
        for (long long p = std::min(rem, cap); p >= 1; --p)
            if (part_allowed(cls, p)) total += rec(rem - p, cls.distinct ? p - 1 : p);
        slot = total;
        return total;
    };
    return rec(n, n);
}

LaurentSeries counts_to_series(
    const std::function<long long(long long)>& counter, Exp N) {
    if (N <= 0 || N >= kInfOrder)
        throw InvalidArgument("series order must be positive and finite");
    std::vector<Coeff> cs(static_cast<std::size_t>(N));
    for (Exp n = 0; n < N; ++n)
        cs[static_cast<std::size_t>(n)] = Coeff(static_cast<long>(counter(n)));
    return LaurentSeries::make(0, std::move(cs), N);
}

}  // namespace qrr
