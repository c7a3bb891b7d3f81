#pragma once

#include <functional>

#include "qrr/laurent.hpp"

namespace qrr {

// A Bailey pair (alpha_n, beta_n) relative to a = 1:
//
//   beta_n = sum_{s=0}^{n} alpha_s / ((q)_{n-s} (q)_{n+s})
//
// level selects one of the seven tabulated alpha families (3 <= level <= 9),
// module_index one of the two columns i = 1, 2.  beta_definitional evaluates
// the defining sum directly and acts as the oracle every other representation
// is checked against.
struct BaileyPair {
    int level;
    int module_index;

    BaileyPair(int l, int i);  // validates ranges

    bool operator==(const BaileyPair&) const = default;
};

enum class BetaForm { definitional, closed, multisum_a, multisum_b, recurrence };

// The alpha rule for (level, module_index) at index n.  Exponents are
// integral for every admissible level; a non-integral exponent would mean the
// rule itself was mistranscribed and throws NonIntegralExponent.
SparsePoly alpha(const BaileyPair& pair, long long n);

// The two classical pairs the construction is built on.
SparsePoly unit_pair_alpha(long long n);
LaurentSeries unit_pair_beta(long long n);
SparsePoly even_pair_alpha(long long n);
LaurentSeries even_pair_beta(long long n, Exp N);

// beta_n from an arbitrary alpha rule via the defining sum, at order N.
LaurentSeries beta_from_alpha(const std::function<SparsePoly(long long)>& alpha_fn, long long n,
                              Exp N);

// Defining sum for the (level, module_index) alpha; memoized, reference valid
// for the process lifetime.
const LaurentSeries& beta_definitional(const BaileyPair& pair, long long n, Exp N);

// Closed forms, levels 5..7 (module_index 2 via the q^{-n} shift).
LaurentSeries beta_closed(const BaileyPair& pair, long long n, Exp N);

// sigma(m, r): the summand abbreviation of the level-3 analysis; zero outside
// 0 <= r <= 2m.
LaurentSeries sigma(long long m, long long r, Exp N);

// Double-sum representations for levels 3, 4, 8, 9 and n = 3m or 3m+1.
// MultisumA sums over -m <= r <= m with a q-binomial factor, MultisumB over
// 0 <= r <= 2m.
LaurentSeries beta_multisum(const BaileyPair& pair, BetaForm form, long long n, Exp N);

// beta_{3m-1} reconstructed from beta_{3m} and beta_{3m+1} through the
// level's three-term relation, with the left-hand monomial (or, at level 6,
// trinomial) factor divided out.
LaurentSeries beta_3m_minus_1(const BaileyPair& pair, long long m, Exp N);

// Level-3 only: beta_{3m-1} directly as
// sum_r sigma(m,r) (q^{6m} - (1-q^{6m+1})/(1-q^{3r+1})).
LaurentSeries beta_3m_minus_1_sigma(long long m, Exp N);

// q^n beta^{(l,2)}_n = beta^{(l,1)}_n.
LaurentSeries beta_i2_from_i1(const BaileyPair& pair, long long n, Exp N);

// Uniform access used by the command-line driver: any form, any n it covers.
LaurentSeries beta_representation(const BaileyPair& pair, BetaForm form, long long n, Exp N);

// Level 3: the cleared three-term relation in n,
//   q^2 (1-q^{2n})(1-q^{2n-1}) beta_n = (-q^2+q^{2n}+q^{2n+1}) beta_{n-1}
//                                        - q^2 beta_{n-2},   n >= 2.
// Other levels: the per-level relation among beta_{3m-1}, beta_{3m},
// beta_{3m+1} at m = n_or_m >= 1.  Both sides use beta_definitional.
EqualityReport check_recurrence(const BaileyPair& pair, long long n_or_m, Exp N);

// The per-level three-term relation for every level including 3.
EqualityReport check_level_recurrence(const BaileyPair& pair, long long m, Exp N);

}  // namespace qrr
