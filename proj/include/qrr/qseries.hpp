#pragma once

#include "qrr/laurent.hpp"

namespace qrr {

// Sum of the negative exponents appearing in the factor progression
// a.exp + base*j, j >= 0 (always <= 0).  This is the valuation of the
// corresponding infinite product and the padding needed to evaluate it
// through a requested window.
Exp poch_negative_valuation(const Monomial& a, Exp base);

// (a; q^base)_inf truncated at order N: factors whose exponent reaches N
// cannot affect the window and are omitted.  A factor (1-1) makes the whole
// product exactly zero.  N must be finite.
LaurentSeries pochhammer_inf(const Monomial& a, Exp base, Exp N);

// (a; q^base)_n.  For n >= 0 the plain finite product (exact when
// N == kInfOrder); for n < 0 the quotient (a;q^b)_inf / (a q^{b n};q^b)_inf,
// which requires finite N and throws UndefinedPochhammer when a factor of the
// denominator vanishes.
LaurentSeries pochhammer_fin(const Monomial& a, Exp base, Exp n, Exp N);

// Memoized reciprocal of (a; q^base)_n at order N (n >= 0).  The cache is
// filled idempotently and is safe for concurrent readers; references stay
// valid for the process lifetime.
const LaurentSeries& pochhammer_fin_inverted(const Monomial& a, Exp base, Exp n, Exp N);

// Gaussian binomial coefficient in q^base as an exact polynomial; zero unless
// 0 <= m <= n.
LaurentSeries qbinomial(Exp n, Exp m, Exp base);

// Jacobi triple product, z a monomial in q: sum_{n in Z} (-1)^n z^n q^{n^2}
// versus (q/z; q^2)_inf (zq; q^2)_inf (q^2; q^2)_inf.
LaurentSeries jtp_sum(const Monomial& z, Exp N);
LaurentSeries jtp_product(const Monomial& z, Exp N);

// Quintuple product identity:
//   lhs = (-qz^3, -q^2 z^-3, q^3; q^3)_inf - z (-q z^-3, -q^2 z^3, q^3; q^3)_inf
//   rhs = (q/z, z, q; q)_inf (q/z^2, q z^2; q^2)_inf
// z = +q^0 is rejected.
LaurentSeries qpi_lhs(const Monomial& z, Exp N);
LaurentSeries qpi_rhs(const Monomial& z, Exp N);

}  // namespace qrr
