#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "fuchsforge/operator_series.hpp"

namespace fuchsforge {

using Json = nlohmann::ordered_json;

/// Expression tree over the atoms {rational, i, t^k, E, D} and the operators
/// + - * ^ with parentheses. D is sugar for t^-1 E.
struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

/// Recursive descent parser for
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)? | '(' expr ')' ('^' uint)?
///   atom   := RATIONAL | 'i' | 't' ('^' int)? | 'E' | 'D'
/// (the optional leading '-' is accepted so printed operators round-trip).
AstPtr parse(const std::string& text);

/// Folds the tree into a graded operator; leaves are built with enough
/// truncation headroom that the result is exact through `trunc`.
OperatorSeries evaluate(const AstPtr& ast, int trunc, Field f);

OperatorSeries parse_operator(const std::string& text, int trunc, Field f);

/// Canonical text: t-powers ascending, polynomials in descending powers of E.
/// parse(print_text(L)) evaluates back to L.
std::string print_text(const OperatorSeries& L);
std::string poly_text(const EulerPolynomial& p);

Json operator_to_json(const OperatorSeries& L);
OperatorSeries operator_from_json(const Json& j);
Json laurent_to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(Field f, const Json& j);

}  // namespace fuchsforge
