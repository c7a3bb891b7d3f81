#include "qrr/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qrr {

namespace {
const Coeff kZero = 0;
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<Exp>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) min_exp_ = ord_min(Exp{0}, order_);
}

LaurentSeries LaurentSeries::monomial(Coeff c, Exp e, Exp order) {
    LaurentSeries s;
    s.order_ = order;
    if (c == 0 || e >= order) {
        s.min_exp_ = ord_min(Exp{0}, order);
        return s;
    }
    s.min_exp_ = e;
    s.coeffs_.push_back(std::move(c));
    return s;
}

LaurentSeries LaurentSeries::make(Exp min_exp, std::vector<Coeff> coeffs, Exp order) {
    if (order < min_exp)
        throw InvalidArgument("series window is negative: order < min_exp");
    if (order != kInfOrder && static_cast<Exp>(coeffs.size()) > order - min_exp)
        throw InvalidArgument("coefficient list longer than the series window");
    LaurentSeries s;
    s.min_exp_ = min_exp;
    s.order_ = order;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

const Coeff& LaurentSeries::coeff(Exp e) const {
    if (e >= order_)
        throw InternalError("coefficient requested at or beyond the truncation order");
    if (e < min_exp_ || e >= stored_end()) return kZero;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentSeries LaurentSeries::truncated(Exp new_order) const {
    if (new_order >= order_) return *this;
    LaurentSeries s;
    s.order_ = new_order;
    s.min_exp_ = min_exp_;
    if (new_order > min_exp_) {
        auto keep = static_cast<std::size_t>(
            std::min<Exp>(static_cast<Exp>(coeffs_.size()), new_order - min_exp_));
        s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(Exp e) const {
    LaurentSeries s = *this;
    s.min_exp_ += e;
    s.order_ = ord_add(s.order_, e);
    if (s.coeffs_.empty()) s.min_exp_ = ord_min(Exp{0}, s.order_);
    return s;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.order_ = ord_min(a.order(), b.order());
    Exp lo = std::min(a.min_exp(), b.min_exp());
    Exp hi = std::min(r.order_, std::max(a.stored_end(), b.stored_end()));
    r.min_exp_ = lo;
    if (hi > lo) {
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo), Coeff{0});
        for (Exp e = std::max(lo, a.min_exp()); e < std::min(hi, a.stored_end()); ++e)
            r.coeffs_[static_cast<std::size_t>(e - lo)] = a.coeff(e);
        for (Exp e = std::max(lo, b.min_exp()); e < std::min(hi, b.stored_end()); ++e)
            r.coeffs_[static_cast<std::size_t>(e - lo)] += b.coeff(e);
    }
    r.normalize();
    return r;
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, neg(b)); }

LaurentSeries neg(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries mul_scalar(const LaurentSeries& a, const Coeff& c) {
    if (c == 0) return LaurentSeries::zero();
    LaurentSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    // The product's order: a's unknown tail enters at order(a) + valuation(b)
    // and symmetrically; a zero factor contributes at its order instead.
    Exp va = a.valuation().value_or(a.order());
    Exp vb = b.valuation().value_or(b.order());
    Exp no = ord_min(ord_add(a.order(), vb), ord_add(b.order(), va));
    LaurentSeries r;
    r.order_ = no;
    if (a.is_zero() || b.is_zero()) {
        r.min_exp_ = ord_min(Exp{0}, no);
        return r;
    }
    Exp lo = a.min_exp() + b.min_exp();
    Exp hi = ord_min(no, lo + static_cast<Exp>(a.stored_coeffs().size()) +
                             static_cast<Exp>(b.stored_coeffs().size()) - 1);
    r.min_exp_ = lo;
    if (hi > lo) {
        r.coeffs_.assign(static_cast<std::size_t>(hi - lo), Coeff{0});
        const auto& ac = a.stored_coeffs();
        const auto& bc = b.stored_coeffs();
        Exp cap = hi - lo;
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (static_cast<Exp>(i) >= cap) break;
            if (ac[i] == 0) continue;
            std::size_t jmax = std::min(bc.size(), static_cast<std::size_t>(cap - static_cast<Exp>(i)));
            for (std::size_t j = 0; j < jmax; ++j) {
                if (bc[j] == 0) continue;
                mpz_addmul(r.coeffs_[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
            }
        }
    }
    r.normalize();
    return r;
}

LaurentSeries invert(const LaurentSeries& s) {
    if (s.exact()) {
        auto v = s.valuation();
        if (!v) throw NotInvertible("cannot invert the zero series");
        if (s.stored_coeffs().size() == 1) {
            const Coeff& c = s.coeff(*v);
            if (c != 1 && c != -1)
                throw NotInvertible("lowest coefficient " + c.get_str() + " is not a unit");
            return LaurentSeries::monomial(c, -*v);
        }
        throw InvalidArgument("inverting an exact polynomial requires an explicit order");
    }
    auto v = s.valuation();
    if (!v) throw NotInvertible("cannot invert a series that is zero to its order");
    return invert(s, s.order() - 2 * *v);
}

LaurentSeries invert(const LaurentSeries& s, Exp N) {
    auto vopt = s.valuation();
    if (!vopt) throw NotInvertible("cannot invert a series that is zero to its order");
    Exp v = *vopt;
    const Coeff& c0 = s.coeff(v);
    if (c0 != 1 && c0 != -1)
        throw NotInvertible("lowest coefficient " + c0.get_str() + " is not a unit");
    Exp no = s.exact() ? N : ord_min(N, s.order() - 2 * v);
    Exp len = no + v;  // coefficients of the normalized reciprocal on [0, len)
    if (len <= 0) return LaurentSeries::zero(no);
    std::vector<Coeff> w(static_cast<std::size_t>(len));
    w[0] = c0;
    const auto& sc = s.stored_coeffs();
    for (Exp k = 1; k < len; ++k) {
        Coeff acc = 0;
        std::size_t jmax = std::min(sc.size() - 1, static_cast<std::size_t>(k));
        for (std::size_t j = 1; j <= jmax; ++j) {
            if (sc[j] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), sc[j].get_mpz_t(),
                       w[static_cast<std::size_t>(k) - j].get_mpz_t());
        }
        if (c0 == 1)
            w[static_cast<std::size_t>(k)] = -acc;
        else
            w[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return LaurentSeries::make(-v, std::move(w), no);
}

LaurentSeries divide_exact(const LaurentSeries& num, const LaurentSeries& den) {
    auto vd_opt = den.valuation();
    if (!vd_opt) throw NotInvertible("division by a series that is zero to its order");
    Exp vd = *vd_opt;
    const Coeff& cd = den.coeff(vd);
    auto vn_opt = num.valuation();
    if (!vn_opt) {
        Exp no = num.exact() ? kInfOrder : num.order() - vd;
        return LaurentSeries::zero(no);
    }
    Exp vn = *vn_opt;
    Exp e0 = vn - vd;
    Exp no;
    if (num.exact() && den.exact()) {
        no = kInfOrder;
    } else {
        no = ord_min(num.order(), ord_add(den.order(), e0));
        no = no == kInfOrder ? kInfOrder : no - vd;
    }
    Exp qlen;
    if (no == kInfOrder) {
        qlen = (num.stored_end() - 1) - (den.stored_end() - 1) - e0 + 1;
        if (qlen <= 0)
            throw NotDivisible("numerator degree too small for exact division");
    } else {
        qlen = no - e0;
        if (qlen <= 0) return LaurentSeries::zero(no);
    }
    const auto& dc = den.stored_coeffs();
    std::size_t rlen = static_cast<std::size_t>(qlen) + dc.size();
    std::vector<Coeff> rem(rlen);
    const auto& nc = num.stored_coeffs();
    for (std::size_t i = 0; i < nc.size() && i < rlen; ++i) rem[i] = nc[i];
    std::vector<Coeff> quot(static_cast<std::size_t>(qlen));
    Coeff qe;
    for (std::size_t k = 0; k < static_cast<std::size_t>(qlen); ++k) {
        if (rem[k] == 0) continue;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), cd.get_mpz_t()))
            throw NotDivisible("coefficient " + rem[k].get_str() + " at exponent " +
                               std::to_string(vn + static_cast<Exp>(k)) +
                               " is not divisible by " + cd.get_str());
        mpz_divexact(qe.get_mpz_t(), rem[k].get_mpz_t(), cd.get_mpz_t());
        for (std::size_t j = 0; j < dc.size() && k + j < rlen; ++j) {
            if (dc[j] == 0) continue;
            mpz_submul(rem[k + j].get_mpz_t(), qe.get_mpz_t(), dc[j].get_mpz_t());
        }
        quot[k] = qe;
    }
    if (no == kInfOrder) {
        for (std::size_t k = static_cast<std::size_t>(qlen); k < rlen; ++k)
            if (rem[k] != 0)
                throw NotDivisible("exact polynomial division left a remainder");
    }
    return LaurentSeries::make(e0, std::move(quot), no);
}

EqualityReport series_equal(const LaurentSeries& s, const LaurentSeries& t) {
    Exp hi = ord_min(s.order(), t.order());
    if (std::max(s.min_exp(), t.min_exp()) >= hi)
        throw EmptyWindow("series windows do not overlap");
    Exp lo = std::min(s.min_exp(), t.min_exp());
    Exp scan_hi = ord_min(hi, std::max(s.stored_end(), t.stored_end()));
    EqualityReport rep;
    rep.window_lo = lo;
    rep.window_hi = hi;
    for (Exp e = lo; e < scan_hi; ++e) {
        const Coeff& a = s.coeff(e);
        const Coeff& b = t.coeff(e);
        if (a != b) {
            rep.status = EqualityReport::Status::mismatch;
            rep.first_bad_exp = e;
            rep.lhs_coeff = a;
            rep.rhs_coeff = b;
            return rep;
        }
    }
    return rep;
}

LaurentSeries to_series(const SparsePoly& p) {
    if (p.terms.empty()) return LaurentSeries::zero();
    Exp lo = p.terms.begin()->first;
    Exp hi = p.terms.rbegin()->first;
    std::vector<Coeff> cs(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms) cs[static_cast<std::size_t>(e - lo)] = c;
    return LaurentSeries::make(lo, std::move(cs), kInfOrder);
}

std::string to_string(const LaurentSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (Exp e = s.min_exp(); e < s.stored_end(); ++e) {
        const Coeff& c = s.coeff(e);
        if (c == 0) continue;
        Coeff mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << mag.get_str() << "*q^" << e;
    }
    return out.str();
}

std::string to_string(const Monomial& m) {
    std::string s = m.sign < 0 ? "-" : "";
    if (m.exp == 0) return s + "1";
    if (m.exp == 1) return s + "q";
    return s + "q^" + std::to_string(m.exp);
}

}  // namespace qrr
