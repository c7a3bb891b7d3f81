#include "qrr/qseries.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace qrr {

namespace {

void require_base(Exp base) {
    if (base < 1) throw InvalidArgument("Pochhammer base must be a positive power of q");
}

// 1 - sign*q^e as an exact value (collapses to 0 or 2 when e == 0).
LaurentSeries lin_factor(int sign, Exp e) {
    return add(LaurentSeries::monomial(1, 0), LaurentSeries::monomial(-sign, e));
}

bool progression_hits_one(const Monomial& a, Exp base, Exp j_min) {
    if (a.sign != 1) return false;
    if (a.exp % base != 0) return false;
    return -a.exp / base >= j_min;
}

// Product of the factors 1 - a.sign*q^(a.exp + base*j) for j in [0, j_end),
// truncated at order N (finite or kInfOrder).  j_end < 0 means unbounded
// (factors are dropped once their exponent reaches the truncation cap).
LaurentSeries factor_product(const Monomial& a, Exp base, Exp j_end, Exp N) {
    Exp vneg = poch_negative_valuation(a, base);
    Exp cap = N == kInfOrder ? kInfOrder : N - vneg;
    LaurentSeries negatives = LaurentSeries::monomial(1, 0);
    LaurentSeries positives = LaurentSeries::monomial(1, 0);
    for (Exp j = 0; j_end < 0 || j < j_end; ++j) {
        Exp e = a.exp + base * j;
        if (e >= cap) {
            if (j_end < 0) break;
            continue;  // cannot affect the window below N
        }
        if (e < 0) {
            negatives = mul(negatives, lin_factor(a.sign, e));
        } else {
            positives = mul(positives, lin_factor(a.sign, e)).truncated(cap);
        }
    }
    LaurentSeries res = mul(negatives, positives);
    return res.truncated(N);
}

}  // namespace

Exp poch_negative_valuation(const Monomial& a, Exp base) {
    if (a.exp >= 0) return 0;
    Exp k = (-a.exp + base - 1) / base;  // number of negative exponents
    return k * a.exp + base * k * (k - 1) / 2;
}

LaurentSeries pochhammer_inf(const Monomial& a, Exp base, Exp N) {
    require_base(base);
    if (N == kInfOrder)
        throw InvalidArgument("infinite Pochhammer product needs a finite order");
    if (progression_hits_one(a, base, 0)) return LaurentSeries::zero();
    return factor_product(a, base, -1, N);
}

LaurentSeries pochhammer_fin(const Monomial& a, Exp base, Exp n, Exp N) {
    require_base(base);
    if (n >= 0) return factor_product(a, base, n, N);
    if (N == kInfOrder)
        throw InvalidArgument("negative-index Pochhammer needs a finite order");
    if (progression_hits_one(a, base, n))
        throw UndefinedPochhammer("(" + to_string(a) + "; q^" + std::to_string(base) + ")_" +
                                  std::to_string(n) + " has a vanishing denominator factor");
    if (a.sign == -1 && a.exp % base == 0) {
        Exp j0 = -a.exp / base;
        if (j0 >= n && j0 < 0)
            throw NotInvertible("(" + to_string(a) + "; q^" + std::to_string(base) + ")_" +
                                std::to_string(n) +
                                " has constant denominator factor 2, which is not a unit");
    }
    LaurentSeries num = pochhammer_inf(a, base, N);
    LaurentSeries den = pochhammer_inf(Monomial{a.sign, a.exp + base * n}, base, N);
    return divide_exact(num, den).truncated(N);
}

const LaurentSeries& pochhammer_fin_inverted(const Monomial& a, Exp base, Exp n, Exp N) {
    if (n < 0) throw InvalidArgument("cached Pochhammer reciprocal requires n >= 0");
    using Key = std::tuple<int, Exp, Exp, Exp, Exp>;
    static std::map<Key, LaurentSeries> cache;
    static std::mutex mu;
    Key key{a.sign, a.exp, base, n, N};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LaurentSeries val = invert(pochhammer_fin(a, base, n, N), N);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(val)).first->second;
}

LaurentSeries qbinomial(Exp n, Exp m, Exp base) {
    require_base(base);
    if (m < 0 || m > n) return LaurentSeries::zero();
    Monomial qb{1, base};
    LaurentSeries num = pochhammer_fin(qb, base, n, kInfOrder);
    LaurentSeries den =
        mul(pochhammer_fin(qb, base, m, kInfOrder), pochhammer_fin(qb, base, n - m, kInfOrder));
    try {
        return divide_exact(num, den);
    } catch (const NotDivisible& e) {
        throw InternalError(std::string("Gaussian binomial division left a remainder: ") +
                            e.what());
    }
}

LaurentSeries jtp_sum(const Monomial& z, Exp N) {
    if (N == kInfOrder) throw InvalidArgument("theta sum needs a finite order");
    Exp a = z.exp;
    std::map<Exp, Coeff> acc;
    Exp K = 2;
    while (K * K - (a < 0 ? -a : a) * K < N) ++K;
    for (Exp n = -K; n <= K; ++n) {
        Exp e = n * n + a * n;
        if (e >= N) continue;
        int c = (n % 2 == 0 ? 1 : -1);
        if (z.sign < 0 && (n % 2 != 0)) c = -c;  // z^n carries sign^n
        acc[e] += c;
    }
    while (!acc.empty() && acc.begin()->second == 0) acc.erase(acc.begin());
    if (acc.empty()) return LaurentSeries::zero(N);
    Exp lo = acc.begin()->first;
    std::vector<Coeff> coeffs(static_cast<std::size_t>(N - lo));
    for (const auto& [e, c] : acc) coeffs[static_cast<std::size_t>(e - lo)] = c;
    return LaurentSeries::make(lo, std::move(coeffs), N);
}

namespace {

// Product of infinite Pochhammer factors with enough internal padding that
// the result is valid through order N despite negative-valuation factors.
LaurentSeries padded_product(const std::vector<std::pair<Monomial, Exp>>& factors, Exp N) {
    Exp pad = 0;
    for (const auto& [arg, base] : factors) pad -= poch_negative_valuation(arg, base);
    Exp M = N + pad;
    LaurentSeries res = LaurentSeries::monomial(1, 0);
    for (const auto& [arg, base] : factors) res = mul(res, pochhammer_inf(arg, base, M));
    return res.truncated(N);
}

}  // namespace

LaurentSeries jtp_product(const Monomial& z, Exp N) {
    int s = z.sign;
    Exp a = z.exp;
    return padded_product(
        {{Monomial{s, 1 - a}, 2}, {Monomial{s, 1 + a}, 2}, {Monomial{1, 2}, 2}}, N);
}

LaurentSeries qpi_lhs(const Monomial& z, Exp N) {
    if (z.sign == 1 && z.exp == 0)
        throw InvalidArgument("quintuple product is undefined at z = 1");
    int s = z.sign;
    Exp a = z.exp;
    LaurentSeries t1 = padded_product(
        {{Monomial{-s, 1 + 3 * a}, 3}, {Monomial{-s, 2 - 3 * a}, 3}, {Monomial{1, 3}, 3}}, N);
    LaurentSeries t2 = padded_product(
        {{Monomial{-s, 1 - 3 * a}, 3}, {Monomial{-s, 2 + 3 * a}, 3}, {Monomial{1, 3}, 3}},
        N + (a < 0 ? -a : a) + 1);
    LaurentSeries zt2 = mul_scalar(shift(t2, a), s);
    return sub(t1, zt2).truncated(N);
}

LaurentSeries qpi_rhs(const Monomial& z, Exp N) {
    if (z.sign == 1 && z.exp == 0)
        throw InvalidArgument("quintuple product is undefined at z = 1");
    int s = z.sign;
    Exp a = z.exp;
    return padded_product({{Monomial{s, 1 - a}, 1},
                           {Monomial{s, a}, 1},
                           {Monomial{1, 1}, 1},
                           {Monomial{1, 1 - 2 * a}, 2},
                           {Monomial{1, 1 + 2 * a}, 2}},
                          N);
}

}  // namespace qrr
