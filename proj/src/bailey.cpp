#include "qrr/bailey.hpp"

#include <initializer_list>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "qrr/qseries.hpp"

namespace qrr {

namespace {

Exp half(long long v) {
    if (v % 2 != 0)
        throw NonIntegralExponent("exponent " + std::to_string(v) + "/2 is not an integer");
    return v / 2;
}

// Exact (sigma q^e; q^b)_k for k >= 0.
LaurentSeries P(int sign, Exp e, Exp b, long long k) {
    return pochhammer_fin(Monomial{sign, e}, b, k, kInfOrder);
}

// prod_{j=k}^{-1} (1 - sigma q^{e+b j}) as an exact Laurent polynomial; the
// reciprocal of (sigma q^e; q^b)_k for k < 0.
LaurentSeries range_product(int sign, Exp e, Exp b, long long k) {
    LaurentSeries out = LaurentSeries::monomial(1, 0);
    for (long long j = k; j < 0; ++j) {
        SparsePoly f;
        f.add(1, 0);
        f.add(-sign, e + b * j);
        out = mul(out, to_series(f));
    }
    return out;
}

LaurentSeries poly(std::initializer_list<std::pair<Exp, long>> ts) {
    SparsePoly p;
    for (const auto& t : ts) p.add(t.second, t.first);
    return to_series(p);
}

// One summand assembled as an exact numerator over an exact denominator;
// Pochhammer symbols with negative index land on the opposite side as range
// products.  value(N) performs the series division, to order >= N.
struct Ratio {
    LaurentSeries num = LaurentSeries::monomial(1, 0);
    LaurentSeries den = LaurentSeries::monomial(1, 0);

    Ratio& times_mono(int sign, Exp e) {
        num = mul(num, LaurentSeries::monomial(sign, e));
        return *this;
    }
    Ratio& times(const LaurentSeries& s) {
        num = mul(num, s);
        return *this;
    }
    Ratio& times_poch(int sign, Exp e, Exp b, long long k) {
        if (k >= 0)
            num = mul(num, P(sign, e, b, k));
        else
            den = mul(den, range_product(sign, e, b, k));
        return *this;
    }
    Ratio& over_poch(int sign, Exp e, Exp b, long long k) {
        if (k >= 0)
            den = mul(den, P(sign, e, b, k));
        else
            num = mul(num, range_product(sign, e, b, k));
        return *this;
    }
    LaurentSeries value(Exp N) const { return divide_exact(num.truncated(N), den); }
};

}  // namespace

BaileyPair::BaileyPair(int l, int i) : level(l), module_index(i) {
    if (l < 3 || l > 9)
        throw InvalidLevel("level must be between 3 and 9, got " + std::to_string(l));
    if (i != 1 && i != 2)
        throw InvalidArgument("module index must be 1 or 2, got " + std::to_string(i));
}

SparsePoly alpha(const BaileyPair& pair, long long n) {
    if (n < 0) throw InvalidArgument("alpha: index must be nonnegative");
    SparsePoly out;
    if (n == 0) {
        out.add(1, 0);
        return out;
    }
    const long long l = pair.level;
    if (pair.module_index == 1) {
        if (n % 3 == 0) {
            long long r = n / 3;
            out.add(1, half((l - 3) * (3 * r * r - r)));
            out.add(1, half((l - 3) * (3 * r * r + r)));
        } else if (n % 3 == 1) {
            long long r = (n - 1) / 3;
            out.add(-1, half((l - 3) * (3 * r * r + r)));
        } else {
            long long r = (n + 1) / 3;
            out.add(-1, half((l - 3) * (3 * r * r - r)));
        }
    } else {
        if (n % 3 == 0) {
            long long r = n / 3;
            out.add(1, half(3 * (l - 3) * r * r - (9 - l) * r));
            out.add(1, half(3 * (l - 3) * r * r + (9 - l) * r));
        } else if (n % 3 == 1) {
            long long r = (n - 1) / 3;
            out.add(-1, half(3 * (l - 3) * r * r + (l + 3) * r) + 1);
        } else {
            long long r = (n + 1) / 3;
            out.add(-1, half(3 * (l - 3) * r * r - (l + 3) * r) + 1);
        }
    }
    return out;
}

SparsePoly unit_pair_alpha(long long n) {
    SparsePoly p;
    if (n < 0) throw InvalidArgument("unit_pair_alpha: index must be nonnegative");
    if (n == 0) {
        p.add(1, 0);
        return p;
    }
    int s = n % 2 ? -1 : 1;
    p.add(s, n * (n - 1) / 2);
    p.add(s, n * (n + 1) / 2);
    return p;
}

LaurentSeries unit_pair_beta(long long n) {
    if (n < 0) throw InvalidArgument("unit_pair_beta: index must be nonnegative");
    return n == 0 ? LaurentSeries::monomial(1, 0) : LaurentSeries::zero();
}

SparsePoly even_pair_alpha(long long n) {
    SparsePoly p;
    if (n < 0) throw InvalidArgument("even_pair_alpha: index must be nonnegative");
    if (n == 0) {
        p.add(1, 0);
        return p;
    }
    p.add(n % 2 ? -2 : 2, n * n);
    return p;
}

LaurentSeries even_pair_beta(long long n, Exp N) {
    if (n < 0) throw InvalidArgument("even_pair_beta: index must be nonnegative");
    return invert(P(1, 2, 2, n), N);
}

LaurentSeries beta_from_alpha(const std::function<SparsePoly(long long)>& alpha_fn, long long n,
                              Exp N) {
    if (n < 0) throw InvalidArgument("beta_from_alpha: index must be nonnegative");
    if (N <= 0) throw InvalidArgument("beta_from_alpha: order must be positive");
    // alpha terms can reach exponent -n (module index 2), so work at N + n.
    const Exp M = N + n;
    LaurentSeries tot = LaurentSeries::zero();
    for (long long s = 0; s <= n; ++s) {
        SparsePoly a = alpha_fn(s);
        if (a.terms.empty()) continue;
        LaurentSeries t = to_series(a);
        t = mul(t, pochhammer_fin_inverted(Monomial{1, 1}, 1, n - s, M));
        t = mul(t, pochhammer_fin_inverted(Monomial{1, 1}, 1, n + s, M));
        tot = add(tot, t);
    }
    return tot.truncated(N);
}

const LaurentSeries& beta_definitional(const BaileyPair& pair, long long n, Exp N) {
    using Key = std::tuple<int, int, long long, Exp>;
    static std::map<Key, LaurentSeries> cache;
    static std::mutex mu;
    Key key{pair.level, pair.module_index, n, N};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LaurentSeries v = beta_from_alpha([&pair](long long s) { return alpha(pair, s); }, n, N);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

LaurentSeries beta_closed(const BaileyPair& pair, long long n, Exp N) {
    if (pair.level < 5 || pair.level > 7)
        throw InvalidLevel("closed forms exist for levels 5, 6 and 7 only");
    if (n < 0) throw InvalidArgument("beta_closed: index must be nonnegative");
    if (N <= 0) throw InvalidArgument("beta_closed: order must be positive");
    if (pair.module_index == 2)
        return shift(beta_closed(BaileyPair(pair.level, 1), n, N + n), -n);
    switch (pair.level) {
        case 5:
            return divide_exact(LaurentSeries::monomial(1, n * n).truncated(N), P(1, 1, 1, 2 * n));
        case 7:
            return divide_exact(LaurentSeries::monomial(1, n).truncated(N), P(1, 1, 1, 2 * n));
        default: {  // 6: q^n (-1;q^3)_n / ((-1;q)_n (q)_{2n})
            LaurentSeries num = shift(P(-1, 0, 3, n), n).truncated(N);
            LaurentSeries den = mul(P(-1, 0, 1, n), P(1, 1, 1, 2 * n));
            return divide_exact(num, den);
        }
    }
}

LaurentSeries sigma(long long m, long long r, Exp N) {
    if (m < 0) throw InvalidArgument("sigma: m must be nonnegative");
    if (N <= 0) throw InvalidArgument("sigma: order must be positive");
    if (r < 0 || r > 2 * m) return LaurentSeries::zero();
    Ratio t;
    t.times_mono(r % 2 ? -1 : 1, half(3 * r * r + r));
    t.times_poch(1, 2, 3, r);
    t.over_poch(1, 2, 3, 2 * m).over_poch(1, 3, 3, 2 * m - r).over_poch(1, 1, 1, 3 * r);
    return t.value(N).truncated(N);
}

LaurentSeries beta_multisum(const BaileyPair& pair, BetaForm form, long long n, Exp N) {
    const int l = pair.level;
    if (l != 3 && l != 4 && l != 8 && l != 9)
        throw InvalidLevel("multisum forms exist for levels 3, 4, 8 and 9 only");
    if (form != BetaForm::multisum_a && form != BetaForm::multisum_b)
        throw InvalidArgument("beta_multisum: form must be multisum_a or multisum_b");
    if (n < 0) throw InvalidArgument("beta_multisum: index must be nonnegative");
    if (N <= 0) throw InvalidArgument("beta_multisum: order must be positive");
    if (n % 3 == 2) throw InvalidResidue("multisum forms cover n = 3m and n = 3m+1 only");
    if (pair.module_index == 2) return shift(beta_multisum(BaileyPair(l, 1), form, n, N + n), -n);
    const long long m = n / 3;
    const bool p1 = n % 3 == 1;
    LaurentSeries tot = LaurentSeries::zero();
    if (form == BetaForm::multisum_a) {
        for (long long r = -m; r <= m; ++r) {
            Ratio t;
            switch (l) {
                case 3:
                    t.times_mono((m + r) % 2 ? -1 : 1,
                                 p1 ? half(3 * m * m + 5 * m + 6 * m * r + 3 * r * r + 5 * r + 2)
                                    : half(3 * m * m - m + 6 * m * r + 3 * r * r - r));
                    t.times_poch(1, 2, 3, 2 * m);
                    t.over_poch(1, 1, 1, p1 ? 6 * m + 1 : 6 * m);
                    t.over_poch(1, 2, 3, p1 ? m + r + 1 : m + r);
                    break;
                case 4:
                    t.times_mono((m + r) % 2 ? -1 : 1,
                                 p1 ? half(6 * m * m + 6 * m + 6 * m * r + 3 * r * r + 5 * r + 2)
                                    : half(6 * m * m + 6 * m * r + 3 * r * r - r));
                    t.times_poch(-1, 2, 3, r).times_poch(1, 2, 3, 2 * m);
                    t.over_poch(1, 1, 1, p1 ? 6 * m + 1 : 6 * m);
                    t.over_poch(-1, 2, 3, m);
                    t.over_poch(1, 2, 3, p1 ? m + r + 1 : m + r);
                    break;
                case 8:
                    t.times_mono(1, half(3 * r * r + r + 6 * m + (p1 ? 2 : 0)));
                    t.times_poch(-1, 2, 3, r).times_poch(1, 2, 3, 2 * m);
                    t.over_poch(1, 1, 1, p1 ? 6 * m + 1 : 6 * m);
                    t.over_poch(-1, 2, 3, m);
                    t.over_poch(1, 2, 3, p1 ? m + r + 1 : m + r);
                    break;
                default:  // 9
                    t.times_mono(1, 3 * r * r + r + 3 * m + (p1 ? 1 : 0));
                    t.times_poch(1, 2, 3, 2 * m);
                    t.over_poch(1, 1, 1, p1 ? 6 * m + 1 : 6 * m);
                    t.over_poch(1, 2, 3, p1 ? m + r + 1 : m + r);
                    break;
            }
            t.times(qbinomial(2 * m, m + r, 3));
            tot = add(tot, t.value(N));
        }
    } else {
        for (long long r = 0; r <= 2 * m; ++r) {
            Ratio t;
            switch (l) {
                case 3:
                    t.times_mono(r % 2 ? -1 : 1,
                                 p1 ? half(3 * r * r + 5 * r) + 1 : half(3 * r * r - r));
                    break;
                case 4:
                    t.times_mono(r % 2 ? -1 : 1,
                                 3 * m * m - 3 * m * r + 3 * r * r + (p1 ? 3 * r + 1 : 0));
                    t.over_poch(-1, 1, 3, m - r);
                    t.over_poch(-1, 2, 3, m);
                    break;
                case 8:
                    t.times_mono(1, 3 * m * m + 2 * m + 3 * r * r + r - 6 * m * r + (p1 ? 1 : 0));
                    t.over_poch(-1, 1, 3, m - r);
                    t.over_poch(-1, 2, 3, m);
                    break;
                default:  // 9
                    t.times_mono(1, 3 * m * m + 2 * m + 3 * r * r + r - 6 * m * r + (p1 ? 1 : 0));
                    break;
            }
            t.over_poch(1, 1, 3, p1 ? 2 * m + 1 : 2 * m);
            t.over_poch(1, 2, 3, p1 ? r + 1 : r);
            t.over_poch(1, 3, 3, 2 * m - r).over_poch(1, 3, 3, r);
            tot = add(tot, t.value(N));
        }
    }
    return tot.truncated(N);
}

LaurentSeries beta_3m_minus_1(const BaileyPair& pair, long long m, Exp N) {
    if (m < 1) throw InvalidArgument("beta_3m_minus_1: m must be positive");
    if (N <= 0) throw InvalidArgument("beta_3m_minus_1: order must be positive");
    const int l = pair.level;
    if (pair.module_index == 2) {
        const Exp n = 3 * m - 1;
        return shift(beta_3m_minus_1(BaileyPair(l, 1), m, N + n), -n);
    }
    auto b = [l](long long n, Exp M) -> const LaurentSeries& {
        return beta_definitional(BaileyPair(l, 1), n, M);
    };
    switch (l) {
        case 3: {
            LaurentSeries rhs =
                sub(neg(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}), poly({{0, 1}, {6 * m + 2, -1}})),
                            b(3 * m + 1, N))),
                    mul(poly({{0, 1}, {6 * m, -1}, {6 * m + 1, -1}}), b(3 * m, N)));
            return rhs.truncated(N);
        }
        case 4: {
            const Exp M = N + 3 * m;
            LaurentSeries rhs =
                sub(neg(mul(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}),
                                    poly({{0, 1}, {6 * m + 2, -1}})),
                                poly({{0, 1}, {3 * m, 1}})),
                            b(3 * m + 1, M))),
                    mul(mul(poly({{3 * m, 1}, {6 * m, 1}}),
                            poly({{0, 1}, {3 * m, -1}, {3 * m + 1, -1}})),
                        b(3 * m, M)));
            return shift(rhs, -3 * m).truncated(N);
        }
        case 5: {
            const Exp M = N + 6 * m - 1;
            LaurentSeries rhs = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})),
                                    b(3 * m, M));
            return shift(rhs, -(6 * m - 1)).truncated(N);
        }
        case 6: {
            LaurentSeries num = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})),
                                    b(3 * m, N + 1));
            LaurentSeries den = poly({{1, 1}, {3 * m, -1}, {6 * m - 1, 1}});
            return divide_exact(num.truncated(N + 1), den).truncated(N);
        }
        case 7: {
            LaurentSeries rhs = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})),
                                    b(3 * m, N + 1));
            return shift(rhs, -1).truncated(N);
        }
        case 8: {
            const Exp M = N + 3;
            LaurentSeries rhs =
                add(neg(mul(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}),
                                    poly({{0, 1}, {6 * m + 2, -1}})),
                                poly({{0, 1}, {3 * m, 1}})),
                            b(3 * m + 1, M))),
                    mul(poly({{1, 1}, {2, 1}, {3 * m + 1, 1}, {6 * m + 2, -1}}), b(3 * m, M)));
            return shift(rhs, -3).truncated(N);
        }
        default: {  // 9
            const Exp M = N + 3;
            LaurentSeries rhs =
                add(neg(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}), poly({{0, 1}, {6 * m + 2, -1}})),
                            b(3 * m + 1, M))),
                    mul(poly({{1, 1}, {2, 1}, {6 * m + 2, -1}}), b(3 * m, M)));
            return shift(rhs, -3).truncated(N);
        }
    }
}

LaurentSeries beta_3m_minus_1_sigma(long long m, Exp N) {
    if (m < 1) throw InvalidArgument("beta_3m_minus_1_sigma: m must be positive");
    if (N <= 0) throw InvalidArgument("beta_3m_minus_1_sigma: order must be positive");
    LaurentSeries tot = LaurentSeries::zero();
    for (long long r = 0; r <= 2 * m; ++r) {
        LaurentSeries frac = divide_exact(poly({{0, 1}, {6 * m + 1, -1}}).truncated(N),
                                          poly({{0, 1}, {3 * r + 1, -1}}));
        LaurentSeries factor = sub(LaurentSeries::monomial(1, 6 * m), frac);
        tot = add(tot, mul(sigma(m, r, N), factor));
    }
    return tot.truncated(N);
}

LaurentSeries beta_i2_from_i1(const BaileyPair& pair, long long n, Exp N) {
    if (n < 0) throw InvalidArgument("beta_i2_from_i1: index must be nonnegative");
    if (N <= 0) throw InvalidArgument("beta_i2_from_i1: order must be positive");
    return shift(beta_definitional(BaileyPair(pair.level, 1), n, N + n), -n);
}

LaurentSeries beta_representation(const BaileyPair& pair, BetaForm form, long long n, Exp N) {
    switch (form) {
        case BetaForm::definitional:
            return beta_definitional(pair, n, N);
        case BetaForm::closed:
            return beta_closed(pair, n, N);
        case BetaForm::multisum_a:
        case BetaForm::multisum_b:
            return beta_multisum(pair, form, n, N);
        default:
            if (n < 2 || n % 3 != 2)
                throw InvalidResidue("the recurrence form reconstructs n = 3m-1 only");
            return beta_3m_minus_1(pair, (n + 1) / 3, N);
    }
}

namespace {

// The recurrence sides can be exactly zero on the whole comparable window
// (block valuation past the order, e.g. level 5 where beta_n starts at q^{n^2});
// such a side degrades to a plain zero so the window stays well formed.
EqualityReport compare_clamped(const LaurentSeries& a, const LaurentSeries& b) {
    const Exp hi = ord_min(a.order(), b.order());
    const LaurentSeries at = a.min_exp() >= hi ? LaurentSeries::zero(hi) : a;
    const LaurentSeries bt = b.min_exp() >= hi ? LaurentSeries::zero(hi) : b;
    return series_equal(at, bt);
}

}  // namespace

EqualityReport check_level_recurrence(const BaileyPair& pair, long long m, Exp N) {
    if (m < 1) throw InvalidArgument("check_level_recurrence: m must be positive");
    if (N <= 0) throw InvalidArgument("check_level_recurrence: order must be positive");
    const int l = pair.level;
    auto b = [l, N](long long n) -> const LaurentSeries& {
        return beta_definitional(BaileyPair(l, 1), n, N);
    };
    LaurentSeries lhs, rhs;
    switch (l) {
        case 3:
            lhs = b(3 * m - 1);
            rhs = sub(neg(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}), poly({{0, 1}, {6 * m + 2, -1}})),
                              b(3 * m + 1))),
                      mul(poly({{0, 1}, {6 * m, -1}, {6 * m + 1, -1}}), b(3 * m)));
            break;
        case 4:
            lhs = shift(b(3 * m - 1), 3 * m);
            rhs = sub(neg(mul(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}),
                                      poly({{0, 1}, {6 * m + 2, -1}})),
                                  poly({{0, 1}, {3 * m, 1}})),
                              b(3 * m + 1))),
                      mul(mul(poly({{3 * m, 1}, {6 * m, 1}}),
                              poly({{0, 1}, {3 * m, -1}, {3 * m + 1, -1}})),
                          b(3 * m)));
            break;
        case 5:
            lhs = shift(b(3 * m - 1), 6 * m - 1);
            rhs = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})), b(3 * m));
            break;
        case 6:
            lhs = mul(poly({{1, 1}, {3 * m, -1}, {6 * m - 1, 1}}), b(3 * m - 1));
            rhs = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})), b(3 * m));
            break;
        case 7:
            lhs = shift(b(3 * m - 1), 1);
            rhs = mul(mul(poly({{0, 1}, {6 * m, -1}}), poly({{0, 1}, {6 * m - 1, -1}})), b(3 * m));
            break;
        case 8:
            lhs = shift(b(3 * m - 1), 3);
            rhs = add(neg(mul(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}),
                                      poly({{0, 1}, {6 * m + 2, -1}})),
                                  poly({{0, 1}, {3 * m, 1}})),
                              b(3 * m + 1))),
                      mul(poly({{1, 1}, {2, 1}, {3 * m + 1, 1}, {6 * m + 2, -1}}), b(3 * m)));
            break;
        default:  // 9
            lhs = shift(b(3 * m - 1), 3);
            rhs = add(neg(mul(mul(poly({{0, 1}, {6 * m + 1, -1}}), poly({{0, 1}, {6 * m + 2, -1}})),
                              b(3 * m + 1))),
                      mul(poly({{1, 1}, {2, 1}, {6 * m + 2, -1}}), b(3 * m)));
            break;
    }
    return compare_clamped(lhs, rhs);
}

EqualityReport check_recurrence(const BaileyPair& pair, long long n_or_m, Exp N) {
    if (N <= 0) throw InvalidArgument("check_recurrence: order must be positive");
    if (pair.level != 3) return check_level_recurrence(pair, n_or_m, N);
    const long long n = n_or_m;
    if (n < 2) throw InvalidArgument("the level-3 relation in n needs n >= 2");
    auto b = [N](long long k) -> const LaurentSeries& {
        return beta_definitional(BaileyPair(3, 1), k, N);
    };
    LaurentSeries lhs = mul(
        shift(mul(poly({{0, 1}, {2 * n, -1}}), poly({{0, 1}, {2 * n - 1, -1}})), 2), b(n));
    LaurentSeries rhs =
        sub(mul(poly({{2, -1}, {2 * n, 1}, {2 * n + 1, 1}}), b(n - 1)), shift(b(n - 2), 2));
    return compare_clamped(lhs, rhs);
}

}  // namespace qrr
