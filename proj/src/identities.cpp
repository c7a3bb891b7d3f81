#include "qrr/identities.hpp"

#include <algorithm>
#include <utility>

#include "qrr/dsl.hpp"
#include "qrr/qseries.hpp"

namespace qrr {

namespace {

void require_order(Exp N) {
    if (N <= 0 || N >= kInfOrder)
        throw InvalidArgument("truncation order must be positive and finite");
}

void require_a22_args(int level, int module_index) {
    if (level < 3 || level > 9)
        throw InvalidLevel("level must be in [3, 9], got " + std::to_string(level));
    const int top = 1 + level / 2;
    if (module_index < 1 || module_index > top)
        throw InvalidArgument("module index must be in [1, " + std::to_string(top) +
                              "] at level " + std::to_string(level) + ", got " +
                              std::to_string(module_index));
}

LaurentSeries one_minus(Exp e) {
    SparsePoly p;
    p.add(1, 0);
    p.add(-1, e);
    return to_series(p);
}

LaurentSeries euler_inverse(Exp N) {
    return invert(pochhammer_inf({1, 1}, 1, N), N);
}

}  // namespace

LaurentSeries wbl_lhs(const std::function<LaurentSeries(long long, Exp)>& beta,
                      Exp N) {
    require_order(N);
    // q^{n^2} beta_n has valuation >= n^2 - n for every pair in scope.
    LaurentSeries tot = LaurentSeries::zero(N);
    for (long long n = 0; n * n - n < N; ++n) {
        const Exp K = std::max<Exp>(1, N - n * n);
        tot = add(tot, shift(beta(n, K), n * n).truncated(N));
    }
    return tot;
}

LaurentSeries theta_sum(const std::function<SparsePoly(long long)>& alpha,
                        Exp N) {
    require_order(N);
    LaurentSeries tot = LaurentSeries::zero(N);
    for (long long n = 0; n * n - n < N; ++n)
        tot = add(tot, shift(to_series(alpha(n)), n * n).truncated(N));
    return tot;
}

LaurentSeries wbl_rhs_from_alpha(
    const std::function<SparsePoly(long long)>& alpha, Exp N) {
    require_order(N);
    return mul(euler_inverse(N), theta_sum(alpha, N)).truncated(N);
}

LaurentSeries character_numerator(int level, int module_index, Exp N) {
    require_order(N);
    require_a22_args(level, module_index);
    const Exp L = level + 3;
    const Exp i = module_index;
    LaurentSeries p = pochhammer_inf({1, i}, L, N);
    p = mul(p, pochhammer_inf({1, L - i}, L, N));
    p = mul(p, pochhammer_inf({1, L}, L, N));
    p = mul(p, pochhammer_inf({1, L - 2 * i}, 2 * L, N));
    p = mul(p, pochhammer_inf({1, L + 2 * i}, 2 * L, N));
    return p.truncated(N);
}

LaurentSeries a22_product(int level, int module_index, Exp N) {
    return mul(character_numerator(level, module_index, N), euler_inverse(N))
        .truncated(N);
}

LaurentSeries grouped_lhs(int level, int module_index, Exp N) {
    require_order(N);
    if (module_index < 1 || module_index > 2)
        throw InvalidArgument("grouped form exists for module index 1 or 2, got " +
                              std::to_string(module_index));
    const BaileyPair base(level, 1);
    const bool first = module_index == 1;
    LaurentSeries tot = LaurentSeries::zero(N);
    // The m-th block has valuation >= (3m-1)(3m-2) for either index.
    for (long long m = 0; m == 0 || (3 * m - 1) * (3 * m - 2) < N; ++m) {
        const Exp pre = first ? 9 * m * m : 9 * m * m - 3 * m;
        auto put = [&](long long n, Exp off) {
            const Exp s = pre + off;
            const Exp K = std::max<Exp>(1, N - s);
            tot = add(tot, shift(beta_definitional(base, n, K), s).truncated(N));
        };
        if (m >= 1) put(3 * m - 1, first ? 1 - 6 * m : 2 - 6 * m);
        put(3 * m, 0);
        put(3 * m + 1, first ? 6 * m + 1 : 6 * m);
    }
    return tot;
}

LaurentSeries cap_sigma_lhs(int which, Exp N) {
    require_order(N);
    if (which != 1 && which != 2)
        throw InvalidArgument("cap-sigma variant must be 1 or 2, got " +
                              std::to_string(which));
    const Exp c1 = which == 1 ? 1 : 2;
    LaurentSeries tot = LaurentSeries::zero(N);
    for (long long m = 0; m == 0 || (3 * m - 1) * (3 * m - 2) < N; ++m) {
        const Exp pre = which == 1 ? 9 * m * m : 9 * m * m - 3 * m;
        const Exp s1 = pre + c1 - 6 * m;
        const Exp s2 = pre;
        const Exp s3 = pre + (which == 1 ? 6 * m + 1 : 6 * m);
        for (long long r = 0; r <= 2 * m; ++r) {
            {
                const Exp K = std::max<Exp>(1, N - s2);
                tot = add(tot, shift(sigma(m, r, K), s2).truncated(N));
            }
            {
                // q^{c1-6m} (q^{6m} - (1-q^{6m+1})/(1-q^{3r+1})); vanishes at m = 0
                const Exp K = std::max<Exp>(1, N - s1);
                const LaurentSeries frac =
                    mul(one_minus(6 * m + 1), invert(one_minus(3 * r + 1), K));
                const LaurentSeries piece =
                    sub(LaurentSeries::monomial(1, 6 * m), frac);
                tot = add(tot, shift(mul(sigma(m, r, K), piece), s1).truncated(N));
            }
            {
                // q^{6m+1 or 6m} (1/(1-q^{6m+2})) (1/(1-q^{3r+1}) - 1)
                const Exp K = std::max<Exp>(1, N - s3);
                const LaurentSeries tail = sub(invert(one_minus(3 * r + 1), K),
                                               LaurentSeries::monomial(1, 0));
                const LaurentSeries piece =
                    mul(invert(one_minus(6 * m + 2), K), tail);
                tot = add(tot, shift(mul(sigma(m, r, K), piece), s3).truncated(N));
            }
        }
    }
    return tot;
}

namespace {

void require_agb_args(int level, int residue) {
    if (level < 1)
        throw InvalidLevel("level must be at least 1, got " + std::to_string(level));
    const int k = 1 + level / 2;
    if (residue < 1 || residue > k)
        throw InvalidArgument("residue must be in [1, " + std::to_string(k) +
                              "] at level " + std::to_string(level) + ", got " +
                              std::to_string(residue));
}

}  // namespace

LaurentSeries agb_lhs(int level, int residue, Exp N) {
    require_order(N);
    require_agb_args(level, residue);
    const int k = 1 + level / 2;
    if (k == 1) return LaurentSeries::monomial(1, 0, N);
    const bool even_level = level % 2 == 0;
    LaurentSeries tot = LaurentSeries::zero(N);
    std::vector<long long> ns;
    auto emit = [&] {
        Exp e = 0;
        for (std::size_t j = 0; j < ns.size(); ++j) {
            e += ns[j] * ns[j];
            if (static_cast<int>(j) + 1 >= residue) e += ns[j];
        }
        if (e >= N) return;
        LaurentSeries term = pochhammer_fin_inverted({1, 1}, 1, ns.back(), N);
        for (std::size_t j = 0; j + 1 < ns.size(); ++j)
            term = mul(term, pochhammer_fin_inverted({1, 1}, 1, ns[j] - ns[j + 1], N));
        if (even_level)
            term = mul(term, pochhammer_fin_inverted({-1, 1}, 1, ns.back(), N));
        tot = add(tot, shift(term, e).truncated(N));
    };
    std::function<void(int, long long)> walk = [&](int idx, long long prev) {
        if (idx == k - 1) {
            emit();
            return;
        }
        for (long long v = 0; v <= prev; ++v) {
            ns.push_back(v);
            walk(idx + 1, v);
            ns.pop_back();
        }
    };
    for (long long n1 = 0; n1 * n1 < N; ++n1) {
        ns.assign(1, n1);
        walk(1, n1);
    }
    return tot;
}

LaurentSeries agb_rhs(int level, int residue, Exp N) {
    require_order(N);
    require_agb_args(level, residue);
    const Exp L = level + 2;
    LaurentSeries p = pochhammer_inf({1, residue}, L, N);
    p = mul(p, pochhammer_inf({1, L - residue}, L, N));
    p = mul(p, pochhammer_inf({1, L}, L, N));
    return mul(p, euler_inverse(N)).truncated(N);
}

LaurentSeries IdentityRecord::rhs(Exp N) const {
    return evaluate(parse(rhs_text), N);
}

namespace {

std::string exp_text(Exp e) {
    return e == 1 ? "q" : "q^" + std::to_string(e);
}

std::string mono_text(int sign, Exp e) {
    std::string s = sign < 0 ? "-" : "";
    return e == 0 ? s + "1" : s + exp_text(e);
}

std::string jtp_rhs_text(const Monomial& z) {
    return "(" + mono_text(z.sign, 1 - z.exp) + "," + mono_text(z.sign, 1 + z.exp) +
           ",q^2;q^2)_inf";
}

std::string qpi_rhs_text(const Monomial& z) {
    return "(" + mono_text(z.sign, 1 - z.exp) + "," + mono_text(z.sign, z.exp) +
           ",q;q)_inf * (" + mono_text(1, 1 - 2 * z.exp) + "," +
           mono_text(1, 1 + 2 * z.exp) + ";q^2)_inf";
}

std::string character_numerator_text(int l, int i) {
    const Exp L = l + 3;
    return "(" + exp_text(i) + "," + exp_text(L - i) + "," + exp_text(L) + ";" +
           exp_text(L) + ")_inf * (" + exp_text(L - 2 * i) + "," +
           exp_text(L + 2 * i) + ";" + exp_text(2 * L) + ")_inf";
}

std::string a22_rhs_text(int l, int i) {
    return character_numerator_text(l, i) + " / (q;q)_inf";
}

std::string agb_rhs_text(int l, int i) {
    const Exp L = l + 2;
    return "(" + exp_text(i) + "," + exp_text(L - i) + "," + exp_text(L) + ";" +
           exp_text(L) + ")_inf / (q;q)_inf";
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> v;
    auto put = [&](std::string id, std::string desc,
                   std::function<LaurentSeries(Exp)> lhs, std::string rhs,
                   Exp order, bool bad = false) {
        v.push_back({std::move(id), std::move(desc), std::move(lhs),
                     std::move(rhs), order, bad});
    };
    for (int sign : {1, -1}) {
        for (Exp a = 1; a <= 4; ++a) {
            const Monomial z{sign, a};
            const std::string zs = mono_text(sign, a);
            put("jtp-z=" + zs, "triple product sum at z = " + zs,
                [z](Exp N) { return jtp_sum(z, N); }, jtp_rhs_text(z), 200);
            put("qpi-z=" + zs, "quintuple product sum at z = " + zs,
                [z](Exp N) { return qpi_lhs(z, N); }, qpi_rhs_text(z), 200);
        }
    }
    for (int l = 3; l <= 9; ++l) {
        for (int i = 1; i <= 2; ++i) {
            const std::string where =
                "level " + std::to_string(l) + ", i = " + std::to_string(i);
            put("module-l" + std::to_string(l) + "-i" + std::to_string(i),
                where + ": grouped beta sum equals the character product",
                [l, i](Exp N) { return grouped_lhs(l, i, N); },
                a22_rhs_text(l, i), 120);
            put("alpha-theta-l" + std::to_string(l) + "-i" + std::to_string(i),
                where + ": theta-weighted alpha sum equals the product numerator",
                [l, i](Exp N) {
                    return theta_sum(
                        [p = BaileyPair(l, i)](long long n) { return alpha(p, n); },
                        N);
                },
                character_numerator_text(l, i), 120);
        }
    }
    put("cap-sigma-1", "sigma double-sum rendering of the level 3, i = 1 product",
        [](Exp N) { return cap_sigma_lhs(1, N); },
        "(-q^2;q^2)_inf * (-q^3;q^6)_inf", 100);
    put("cap-sigma-2", "sigma double-sum rendering of the level 3, i = 2 product",
        [](Exp N) { return cap_sigma_lhs(2, N); },
        "(-q;q^2)_inf * (-q^6;q^6)_inf", 100);
    for (int l = 1; l <= 7; ++l) {
        for (int i = 1; i <= 1 + l / 2; ++i) {
            put("agb-l" + std::to_string(l) + "-i" + std::to_string(i),
                "Andrews-Gordon-Bressoud identity, level " + std::to_string(l) +
                    ", i = " + std::to_string(i),
                [l, i](Exp N) { return agb_lhs(l, i, N); }, agb_rhs_text(l, i),
                100);
        }
    }
    put("negative-control",
        "Andrews-Gordon-Bressoud level 3, i = 1 against a perturbed product; "
        "kept as a mismatch sentinel",
        [](Exp N) { return agb_lhs(3, 1, N); },
        "(q,q^4,q^4;q^5)_inf / (q;q)_inf", 100, true);
    return v;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> table = build_catalog();
    return table;
}

const IdentityRecord* find_identity(const std::string& id) {
    for (const IdentityRecord& rec : catalog())
        if (rec.id == id) return &rec;
    return nullptr;
}

EqualityReport verify(const IdentityRecord& rec, Exp N) {
    const Exp order = N > 0 ? N : rec.default_order;
    return series_equal(rec.lhs(order), rec.rhs(order));
}

EqualityReport verify_id(const std::string& id, Exp N) {
    const IdentityRecord* rec = find_identity(id);
    if (!rec) throw UnknownIdentity("unknown identity id: " + id);
    return verify(*rec, N);
}

EqualityReport verify_jtp(const Monomial& z, Exp N) {
    return series_equal(jtp_sum(z, N), jtp_product(z, N));
}

EqualityReport verify_qpi(const Monomial& z, Exp N) {
    return series_equal(qpi_lhs(z, N), qpi_rhs(z, N));
}

EqualityReport verify_module(int level, int module_index, Exp N) {
    return series_equal(grouped_lhs(level, module_index, N),
                        a22_product(level, module_index, N));
}

EqualityReport verify_alpha_theta(int level, int module_index, Exp N) {
    const BaileyPair pair(level, module_index);
    const LaurentSeries lhs = theta_sum(
        [&pair](long long n) { return alpha(pair, n); }, N);
    return series_equal(lhs, character_numerator(level, module_index, N));
}

EqualityReport verify_cap_sigma(int which, Exp N) {
    const LaurentSeries lhs = cap_sigma_lhs(which, N);
    const LaurentSeries rhs =
        which == 1 ? mul(pochhammer_inf({-1, 2}, 2, N),
                         pochhammer_inf({-1, 3}, 6, N))
                   : mul(pochhammer_inf({-1, 1}, 2, N),
                         pochhammer_inf({-1, 6}, 6, N));
    return series_equal(lhs, rhs.truncated(N));
}

EqualityReport verify_agb(int level, int residue, Exp N) {
    return series_equal(agb_lhs(level, residue, N), agb_rhs(level, residue, N));
}

FourWayReport four_way(int level, int module_index, Exp N) {
    const BaileyPair pair(level, module_index);
    const LaurentSeries weighted = wbl_lhs(
        [&pair](long long n, Exp K) -> LaurentSeries {
            return beta_definitional(pair, n, K);
        },
        N);
    FourWayReport rep;
    rep.alpha_side = series_equal(
        weighted,
        wbl_rhs_from_alpha([&pair](long long n) { return alpha(pair, n); }, N));
    rep.grouped = series_equal(weighted, grouped_lhs(level, module_index, N));
    rep.product = series_equal(weighted, a22_product(level, module_index, N));
    return rep;
}

}  // namespace qrr
