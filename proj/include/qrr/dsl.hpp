#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qrr/laurent.hpp"

namespace qrr {

// Textual language for products of q-Pochhammer symbols:
//
//   expr     := factor { ("*" | "/") factor }
//   factor   := poch [ "^" sint ] | mono
//   poch     := "(" mono { "," mono } ";" basemono ")" "_" ( "inf" | sint )
//   mono     := [ "-" ] ( "1" | "q" [ "^" sint ] )
//   basemono := "q" [ "^" uint ]
//
// Whitespace between tokens is ignored; "/f" is shorthand for "f^-1".
// Monomial literals are limited to 1, -1, q^k and -q^k; the base must be a
// positive power of q with sign +1.

struct ParseError : Error {
    std::size_t position;
    std::string expected;
    std::string found;

    ParseError(std::size_t pos, std::string exp, std::string fnd)
        : Error("parse error at offset " + std::to_string(pos) + ": expected " + exp +
                ", found " + fnd),
          position(pos),
          expected(std::move(exp)),
          found(std::move(fnd)) {}
};

struct PochFactor {
    std::vector<Monomial> args;
    Exp base = 1;
    bool infinite = false;
    Exp index = 0;  // meaningful when !infinite; may be negative

    bool operator==(const PochFactor&) const = default;
};

struct Factor {
    std::variant<PochFactor, Monomial> node;
    Exp power = 1;  // never zero

    bool operator==(const Factor&) const = default;
};

struct ProductExpr {
    std::vector<Factor> factors;

    bool operator==(const ProductExpr&) const = default;
};

// Throws ParseError; never returns a partial tree.
ProductExpr parse(std::string_view text);

// A single complete monomial literal (used for the --z command-line option).
Monomial parse_monomial(std::string_view text);

// Canonical rendering; parsing it back yields an equal AST for any tree that
// itself came from parse().
std::string pretty_print(const ProductExpr& e);

// Product of all factors at order N; negative powers via inversion, finite
// indices via the quotient definition.  Errors from series-core are rethrown
// with the offending factor named.
LaurentSeries evaluate(const ProductExpr& e, Exp N);

inline LaurentSeries evaluate(std::string_view text, Exp N) { return evaluate(parse(text), N); }

}  // namespace qrr
