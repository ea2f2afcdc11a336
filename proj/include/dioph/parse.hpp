#ifndef DIOPH_PARSE_HPP
#define DIOPH_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/poly.hpp"

namespace dioph {

/// Parses a polynomial in X.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*      '/' only by constants
///   unary  := '-' unary | atom ('^' uint)?
///   atom   := uint | 'X' | 'sqrt(' ['-'] uint ')' | '(' expr ')'
///
/// Unary minus binds looser than '^', so "-X^2" is -(X^2). The field is
/// Q unless a sqrt(k) with non-square k appears; `field` forces one.
/// Throws SyntaxError (with offset), MixedRadicands or DivisionByZero.
Poly parse_poly(std::string_view text, std::optional<FieldSpec> field = std::nullopt);

/// Parses several expressions into one common field, promoting rational ones.
std::vector<Poly> parse_polys(const std::vector<std::string>& texts, std::optional<FieldSpec> field = std::nullopt);

/// Brings polynomials into one field; throws MixedRadicands for two different radicands.
std::vector<Poly> unify_fields(std::vector<Poly> polys, std::optional<FieldSpec> field = std::nullopt);

/// Parses "sqrt5", "sqrt(5)", "Q(sqrt(5))", "Q" or "rational".
FieldSpec parse_field(std::string_view text);

}  // namespace dioph

#endif  // DIOPH_PARSE_HPP
