#pragma once

#include <functional>
#include <map>
#include <set>

#include "qrr/laurent.hpp"

// Combinatorial partition counters, independent of the series machinery, used
// to cross-check the analytic product sides by plain enumeration.

namespace qrr {

// Extra condition attached to one adjacent-gap value: the gap is admissible
// only when the larger part of the pair lies in larger_residues mod modulus.
struct GapException {
    int modulus = 1;
    std::set<int> larger_residues;

    bool operator==(const GapException&) const = default;
};

// Decreasing part lists l_1 >= l_2 >= ... with every adjacent difference
// l_i - l_{i+1} at least min_gap, parts outside forbidden_parts, and any gap
// listed in gap_exceptions additionally subject to its residue condition.
// Gaps not listed are unrestricted beyond min_gap.
struct DifferenceRule {
    std::set<long long> forbidden_parts;
    long long min_gap = 1;
    std::map<long long, GapException> gap_exceptions;

    bool operator==(const DifferenceRule&) const = default;
};

// Parts drawn from the allowed residues mod modulus; strictly decreasing part
// lists when distinct is set.
struct CongruenceClass {
    int modulus = 1;
    std::set<int> allowed_residues;
    bool distinct = false;

    bool operator==(const CongruenceClass&) const = default;
};

// The two Capparelli rule-sets: no part equal to 1 (first) or 2 (second),
// adjacent differences at least 2, difference exactly 2 only when the larger
// part is 1 mod 3, difference exactly 3 only when the larger part is 0 mod 3.
DifferenceRule capparelli_first_rule();
DifferenceRule capparelli_second_rule();

// Their congruence-side counterparts: distinct parts in {0,2,3,4} mod 6;
// unrestricted parts in {2,3,9,10} mod 12; distinct parts in {0,1,3,5} mod 6.
CongruenceClass capparelli_first_distinct_mod6();
CongruenceClass capparelli_first_mod12();
CongruenceClass capparelli_second_distinct_mod6();

// Partitions of n satisfying the rule, by exhaustive descent over decreasing
// part lists (memoized on remaining sum and previous part).
long long count_difference(const DifferenceRule& rule, long long n);

// Partitions of n into allowed parts, by dynamic programming.
long long count_congruence(const CongruenceClass& cls, long long n);

// Same count by memoized descent; an independent algorithm kept as a
// cross-check of the DP.
long long count_congruence_descent(const CongruenceClass& cls, long long n);

// Sum of counter(n) q^n over 0 <= n < N.
LaurentSeries counts_to_series(const std::function<long long(long long)>& counter,
                               Exp N);

}  // namespace qrr
