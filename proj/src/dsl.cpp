#include "qrr/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

#include "qrr/qseries.hpp"

namespace qrr {

namespace {

bool ieq(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::tolower(static_cast<unsigned char>(a[k])) !=
            std::tolower(static_cast<unsigned char>(b[k])))
            return false;
    return true;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ProductExpr parse_expr() {
        ProductExpr e;
        e.factors.push_back(parse_factor(+1));
        skip_ws();
        while (!at_end()) {
            int orientation;
            if (peek() == '*') {
                orientation = +1;
            } else if (peek() == '/') {
                orientation = -1;
            } else {
                fail(pos_, "'*', '/' or end of input");
            }
            ++pos_;
            e.factors.push_back(parse_factor(orientation));
            skip_ws();
        }
        return e;
    }

    Monomial parse_complete_monomial() {
        Monomial m = parse_mono();
        skip_ws();
        if (!at_end()) fail(pos_, "end of input");
        return m;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() { return text_[pos_]; }

    std::string describe(std::size_t at) {
        if (at >= text_.size()) return "end of input";
        char c = text_[at];
        if (std::isalnum(static_cast<unsigned char>(c))) {
            std::size_t e = at;
            while (e < text_.size() && std::isalnum(static_cast<unsigned char>(text_[e]))) ++e;
            return "'" + std::string(text_.substr(at, e - at)) + "'";
        }
        return std::string("'") + c + "'";
    }

    [[noreturn]] void fail(std::size_t at, std::string expected) {
        throw ParseError(at, std::move(expected), describe(at));
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(pos_, what);
        ++pos_;
    }

    Exp parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(pos_, what);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 12) fail(start, "a smaller integer");
        return std::strtoll(digits.c_str(), nullptr, 10);
    }

    Exp parse_sint(const char* what) {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        Exp u = parse_uint(what);
        return neg ? -u : u;
    }

    Monomial parse_mono() {
        skip_ws();
        Monomial m;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            m.sign = -1;
            ++pos_;
            skip_ws();
        }
        if (pos_ >= text_.size()) fail(pos_, "'1' or 'q'");
        if (text_[pos_] == '1') {
            ++pos_;
            m.exp = 0;
            return m;
        }
        if (text_[pos_] == 'q') {
            ++pos_;
            m.exp = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                m.exp = parse_sint("an integer exponent");
            }
            return m;
        }
        fail(pos_, "'1' or 'q'");
    }

    Exp parse_base() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != 'q') fail(pos_, "base monomial 'q' or 'q^b'");
        ++pos_;
        skip_ws();
        Exp b = 1;
        std::size_t bpos = pos_;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bpos = pos_;
            b = parse_uint("a positive base exponent");
        }
        if (b < 1) fail(bpos, "a positive base exponent");
        return b;
    }

    Factor parse_factor(int orientation) {
        skip_ws();
        if (pos_ >= text_.size()) fail(pos_, "a factor");
        Factor f;
        if (peek() == '(') {
            ++pos_;
            PochFactor p;
            p.args.push_back(parse_mono());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                p.args.push_back(parse_mono());
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != ';') fail(pos_, "',' or ';'");
            ++pos_;
            p.base = parse_base();
            expect(')', "')'");
            expect('_', "'_'");
            skip_ws();
            if (pos_ + 3 <= text_.size() && ieq(text_.substr(pos_, 3), "inf")) {
                p.infinite = true;
                pos_ += 3;
            } else {
                p.index = parse_sint("'inf' or an integer index");
            }
            f.node = std::move(p);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_ws();
                std::size_t ppos = pos_;
                Exp pw = parse_sint("an integer power");
                if (pw == 0) fail(ppos, "a nonzero power");
                f.power = pw;
            }
        } else {
            f.node = parse_mono();
        }
        f.power *= orientation;
        return f;
    }
};

std::string mono_text(const Monomial& m) { return to_string(m); }

std::string poch_text(const PochFactor& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.args.size(); ++k) {
        if (k) out += ",";
        out += mono_text(p.args[k]);
    }
    out += ";q";
    if (p.base != 1) out += "^" + std::to_string(p.base);
    out += ")_";
    out += p.infinite ? "inf" : std::to_string(p.index);
    return out;
}

std::string factor_text(const Factor& f) {
    if (const auto* p = std::get_if<PochFactor>(&f.node)) {
        std::string out = poch_text(*p);
        if (f.power != 1) out += "^" + std::to_string(f.power);
        return out;
    }
    const auto& m = std::get<Monomial>(f.node);
    // A monomial power collapses into a single monomial.
    Monomial c{f.power % 2 == 0 ? 1 : m.sign, m.exp * f.power};
    return mono_text(c);
}

// Worst-case valuation magnitude a factor (or its inverse) can contribute.
Exp factor_pad(const Factor& f) {
    Exp bound = 0;
    if (const auto* p = std::get_if<PochFactor>(&f.node)) {
        for (const Monomial& a : p->args) {
            Exp lo, hi;  // factor range [lo, hi) of indices j
            if (p->infinite || p->index >= 0) {
                lo = 0;
                hi = p->infinite ? kInfOrder : p->index;
            } else {
                lo = p->index;
                hi = 0;
            }
            if (a.exp >= 0 && lo >= 0) continue;
            // sum of |min(0, a.exp + base*j)| over j in [lo, hi)
            Exp sum = 0;
            for (Exp j = lo; j < hi; ++j) {
                Exp e = a.exp + p->base * j;
                if (e >= 0) {
                    if (j >= 0) break;
                    continue;
                }
                sum += -e;
            }
            bound += sum;
        }
    } else {
        const auto& m = std::get<Monomial>(f.node);
        bound = m.exp < 0 ? -m.exp : m.exp;
    }
    Exp p = f.power < 0 ? -f.power : f.power;
    return bound * p;
}

LaurentSeries factor_base_value(const Factor& f, Exp M) {
    if (const auto* p = std::get_if<PochFactor>(&f.node)) {
        LaurentSeries acc = LaurentSeries::monomial(1, 0);
        for (const Monomial& a : p->args) {
            LaurentSeries part = p->infinite ? pochhammer_inf(a, p->base, M)
                                             : pochhammer_fin(a, p->base, p->index, M);
            acc = mul(acc, part);
        }
        return acc;
    }
    const auto& m = std::get<Monomial>(f.node);
    return LaurentSeries::monomial(m.sign, m.exp);
}

LaurentSeries factor_value(const Factor& f, Exp M) {
    LaurentSeries base = factor_base_value(f, M);
    Exp reps = f.power < 0 ? -f.power : f.power;
    if (f.power < 0) base = invert(base, M);
    LaurentSeries out = base;
    for (Exp k = 1; k < reps; ++k) out = mul(out, base);
    return out;
}

template <class E>
[[noreturn]] void rethrow_for(const Factor& f, const E& e) {
    throw E("factor " + factor_text(f) + ": " + e.what());
}

}  // namespace

ProductExpr parse(std::string_view text) { return Parser(text).parse_expr(); }

Monomial parse_monomial(std::string_view text) { return Parser(text).parse_complete_monomial(); }

std::string pretty_print(const ProductExpr& e) {
    std::string out;
    for (std::size_t k = 0; k < e.factors.size(); ++k) {
        const Factor& f = e.factors[k];
        const bool mono_div = k > 0 && std::holds_alternative<Monomial>(f.node) && f.power == -1;
        if (mono_div) {
            out += " / " + mono_text(std::get<Monomial>(f.node));
            continue;
        }
        if (k == 0 && std::holds_alternative<Monomial>(f.node) && f.power < 0) {
            // (s*q^e)^p is itself a monomial; collapse so the result stays in
            // the grammar, which has no leading '/'.
            out += factor_text(f);
            continue;
        }
        if (k) out += " * ";
        out += factor_text(f);
    }
    return out;
}

LaurentSeries evaluate(const ProductExpr& e, Exp N) {
    if (N <= 0) throw InvalidArgument("evaluate: order must be positive");
    if (e.factors.empty()) throw InvalidArgument("evaluate: empty product");
    Exp pad = 0;
    for (const Factor& f : e.factors) pad += factor_pad(f);
    const Exp M = N + pad;
    LaurentSeries acc = LaurentSeries::monomial(1, 0);
    for (const Factor& f : e.factors) {
        LaurentSeries v;
        try {
            v = factor_value(f, M);
        } catch (const NotInvertible& ex) {
            rethrow_for(f, ex);
        } catch (const UndefinedPochhammer& ex) {
            rethrow_for(f, ex);
        } catch (const NotDivisible& ex) {
            rethrow_for(f, ex);
        }
        acc = mul(acc, v);
    }
    acc = acc.truncated(N);
    if (acc.order() < N)
        throw InternalError("evaluate: padding fell short (order " + std::to_string(acc.order()) +
                            " < " + std::to_string(N) + ")");
    return acc;
}

}  // namespace qrr
