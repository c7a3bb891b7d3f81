#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrr/errors.hpp"

namespace qrr {

using Coeff = mpz_class;
using Exp = long long;

// Order sentinel for exact values (polynomials, monomials): every coefficient
// is known.  Order arithmetic saturates at this value, see ord_add.
inline constexpr Exp kInfOrder = Exp{1} << 50;

inline Exp ord_add(Exp a, Exp b) {
    if (a >= kInfOrder / 2 || b >= kInfOrder / 2) return kInfOrder;
    return a + b;
}

inline Exp ord_min(Exp a, Exp b) { return a < b ? a : b; }

// sign * q^exp with sign in {+1, -1}.
struct Monomial {
    int sign = 1;
    Exp exp = 0;

    bool operator==(const Monomial&) const = default;
};

// Finite signed sum of q-powers; no zero coefficients are stored.
struct SparsePoly {
    std::map<Exp, Coeff> terms;

    void add(Coeff c, Exp e) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(e, c);
        if (fresh) return;
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    bool operator==(const SparsePoly&) const = default;
};

// Truncated formal Laurent series over the integers.
//
// The value is sum of coeff(e) * q^e over min_exp() <= e < order(); it is
// exactly zero below min_exp() and unknown at order() and above.  Coefficient
// storage may be shorter than the window; missing entries are known zeros.
// Instances are immutable after construction.
class LaurentSeries {
  public:
    LaurentSeries() : min_exp_(0), order_(kInfOrder) {}

    static LaurentSeries zero(Exp order = kInfOrder) {
        LaurentSeries s;
        s.order_ = order;
        s.min_exp_ = ord_min(Exp{0}, order);
        return s;
    }

    static LaurentSeries monomial(Coeff c, Exp e, Exp order = kInfOrder);
    static LaurentSeries make(Exp min_exp, std::vector<Coeff> coeffs, Exp order);

    Exp min_exp() const { return min_exp_; }
    Exp order() const { return order_; }
    bool exact() const { return order_ == kInfOrder; }
    const std::vector<Coeff>& stored_coeffs() const { return coeffs_; }

    // Highest exponent with stored (possibly zero) coefficient, plus one.
    Exp stored_end() const { return min_exp_ + static_cast<Exp>(coeffs_.size()); }

    // Requires e < order(); exponents below min_exp or beyond storage are zero.
    const Coeff& coeff(Exp e) const;

    bool is_zero() const { return coeffs_.empty(); }

    // Lowest exponent with a nonzero coefficient; empty if zero to order.
    std::optional<Exp> valuation() const {
        if (coeffs_.empty()) return std::nullopt;
        return min_exp_;
    }

    LaurentSeries truncated(Exp new_order) const;
    LaurentSeries shifted(Exp e) const;

  private:
    void normalize();

    Exp min_exp_;
    Exp order_;
    std::vector<Coeff> coeffs_;  // coeffs_[k] is the coefficient of q^(min_exp_+k)

    friend LaurentSeries add(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries mul(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries neg(const LaurentSeries&);
    friend LaurentSeries mul_scalar(const LaurentSeries&, const Coeff&);
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries neg(const LaurentSeries& a);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul_scalar(const LaurentSeries& a, const Coeff& c);
inline LaurentSeries shift(const LaurentSeries& s, Exp e) { return s.shifted(e); }

// Exact polynomial with the same terms.
LaurentSeries to_series(const SparsePoly& p);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return neg(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }

// Reciprocal of s to the order implied by s (finite order required; the
// result's order is order(s) - 2*valuation(s)).  The lowest coefficient of s
// must be +1 or -1.
LaurentSeries invert(const LaurentSeries& s);

// Reciprocal truncated at order N; accepts exact operands.
LaurentSeries invert(const LaurentSeries& s, Exp N);

// Exact stepwise division: every partial remainder's lowest coefficient must
// be divisible by the divisor's lowest coefficient (throws NotDivisible
// otherwise).  Exact operands yield an exact quotient when the division
// terminates; a nonzero final remainder on exact operands throws.
LaurentSeries divide_exact(const LaurentSeries& num, const LaurentSeries& den);

struct EqualityReport {
    enum class Status { equal, mismatch };
    Status status = Status::equal;
    Exp window_lo = 0;
    Exp window_hi = 0;
    std::optional<Exp> first_bad_exp;
    std::optional<Coeff> lhs_coeff;
    std::optional<Coeff> rhs_coeff;

    bool equal() const { return status == Status::equal; }
};

// Compares on [min(min_exp), min(order)): below the larger min_exp the other
// operand is known to be zero, so the extra zone is compared against zero.
// Throws EmptyWindow when [max(min_exp), min(order)) is empty.
EqualityReport series_equal(const LaurentSeries& s, const LaurentSeries& t);

// Ascending "c*q^e" rendering, zero coefficients omitted; "0" for the zero
// series.
std::string to_string(const LaurentSeries& s);

std::string to_string(const Monomial& m);

}  // namespace qrr
