// Text form of the values the tools exchange: a small expression grammar, a
// canonical printer, and the promotion rules that let scalars, polynomials,
// functionals, and their spinor-valued forms mix in one expression.
#pragma once

#include "deltasym/delta_expansion.hpp"
#include "deltasym/poly.hpp"
#include "deltasym/rng.hpp"
#include "deltasym/spinor.hpp"

#include <string>
#include <variant>

namespace dsym {

/// Result of parsing: one of the five value shapes the grammar denotes.
/// Spinor-free text yields Scalar, Poly, or DeltaExpansion; spinor monomials
/// lift polynomial and functional values to their spinor-valued forms.
struct Value {
    std::variant<Scalar, Poly, DeltaExpansion, SpinorPoly<Poly>, SpinorPoly<DeltaExpansion>>
        data;

    std::string str() const;
    friend bool operator==(const Value& a, const Value& b) = default;
};

/// Parses the grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'i' | var | 'd[' uint,... ']' | 'cov(' uint ')' | '(' expr ')'
///   var    := ('x'|'p') digit | ('w'|'wb') digit
/// Coordinate digits are 0-based and must stay below var_dim; spinor digits
/// are 1-based (1 or 2). A delta literal d[...] fixes its own dimension by
/// the index count. Mixing position with momentum variables, polynomials
/// with functionals, or different dimensions is rejected.
Value parse_expression(const std::string& text, std::size_t var_dim = 4);

/// Shape-enforcing wrappers. A bare scalar promotes to a constant polynomial
/// (in the given space) or to a multiple of delta; anything else of the
/// wrong shape is a parse error.
Poly parse_poly(const std::string& text, std::size_t var_dim = 4,
                VarSpace constant_space = VarSpace::position);
DeltaExpansion parse_delta(const std::string& text, std::size_t var_dim = 4);
SpinorPoly<DeltaExpansion> parse_spinor_delta(const std::string& text);

/// Deterministic generator for the round-trip checks. Every produced value
/// prints to a string that parses back to an equal value of the same shape.
Value random_value(Rng& rng);

} // namespace dsym
