#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrr/bailey.hpp"
#include "qrr/laurent.hpp"

// Series-product identity verification.  Every check reduces to comparing two
// truncated Laurent series coefficient by coefficient over the shared window;
// nothing here is numeric or probabilistic.
//
// The catalog is a static table of named identity instances.  Each record
// carries a closure for the sum side and a product-expression string for the
// product side, so the two sides travel through entirely different code paths
// before they meet in series_equal.

namespace qrr {

// Sum q^{n^2} beta_n over n >= 0.  The closure receives (n, order) and must
// return beta_n correct at least to that order.
LaurentSeries wbl_lhs(const std::function<LaurentSeries(long long, Exp)>& beta,
                      Exp N);

// Sum q^{n^2} alpha_n over n >= 0, as an exact Laurent polynomial truncated
// to order N.
LaurentSeries theta_sum(const std::function<SparsePoly(long long)>& alpha,
                        Exp N);

// theta_sum divided by (q;q)_inf.  Equals wbl_lhs when (alpha, beta) form a
// Bailey pair relative to a = 1.
LaurentSeries wbl_rhs_from_alpha(
    const std::function<SparsePoly(long long)>& alpha, Exp N);

// Character product for the level-l standard modules, 1 <= i <= 1 + l/2:
//   (q^i, q^{l+3-i}, q^{l+3}; q^{l+3})_inf (q^{l+3-2i}, q^{l+2i+3}; q^{2l+6})_inf
// divided by (q;q)_inf.  character_numerator is the same without the division.
LaurentSeries a22_product(int level, int module_index, Exp N);
LaurentSeries character_numerator(int level, int module_index, Exp N);

// The q^{n^2} beta sum rearranged along n = 3m, 3m +- 1 with the level-l
// Bailey betas at i = 1 and per-index monomial prefactors.  beta_{-1} := 0.
LaurentSeries grouped_lhs(int level, int module_index, Exp N);

// grouped_lhs at level 3 with the betas replaced by their sigma double-sum
// renderings, which = 1 or 2.
LaurentSeries cap_sigma_lhs(int which, Exp N);

// Andrews-Gordon-Bressoud multisum and its product side, level >= 1 and
// 1 <= i <= k where k = 1 + level/2:
//   lhs: sum over n_1 >= ... >= n_{k-1} >= 0 of
//        q^{n_1^2+...+n_{k-1}^2 + n_i+...+n_{k-1}}
//        / ((q)_{n_1-n_2} ... (q)_{n_{k-2}-n_{k-1}} (q)_{n_{k-1}})
//        with an extra (-q;q)_{n_{k-1}} in the denominator at even level
//   rhs: (q^i, q^{l+2-i}, q^{l+2}; q^{l+2})_inf / (q;q)_inf
LaurentSeries agb_lhs(int level, int residue, Exp N);
LaurentSeries agb_rhs(int level, int residue, Exp N);

struct IdentityRecord {
    std::string id;
    std::string description;
    std::function<LaurentSeries(Exp)> lhs;
    std::string rhs_text;  // product-DSL source for the other side
    Exp default_order = 0;
    bool expect_mismatch = false;  // true only for the shipped negative control

    LaurentSeries rhs(Exp N) const;  // parse rhs_text and evaluate at order N
};

// Immutable after first use; safe to share across threads.
const std::vector<IdentityRecord>& catalog();

// Linear lookup by id; nullptr when absent.
const IdentityRecord* find_identity(const std::string& id);

// Compare both sides of a record at order N (N <= 0 means default_order).
EqualityReport verify(const IdentityRecord& rec, Exp N = 0);
// Same by id; throws UnknownIdentity.
EqualityReport verify_id(const std::string& id, Exp N = 0);

// Parameterized families behind the catalog entries.
EqualityReport verify_jtp(const Monomial& z, Exp N);
EqualityReport verify_qpi(const Monomial& z, Exp N);
EqualityReport verify_module(int level, int module_index, Exp N);
EqualityReport verify_alpha_theta(int level, int module_index, Exp N);
EqualityReport verify_cap_sigma(int which, Exp N);
EqualityReport verify_agb(int level, int residue, Exp N);

// Four renderings of one module character: the weighted beta sum, the alpha
// sum over (q;q)_inf, the grouped rearrangement, and the infinite product.
// All comparisons are against the weighted beta sum.
struct FourWayReport {
    EqualityReport alpha_side;
    EqualityReport grouped;
    EqualityReport product;
    bool all_equal() const {
        return alpha_side.equal() && grouped.equal() && product.equal();
    }
};
FourWayReport four_way(int level, int module_index, Exp N);

}  // namespace qrr
