#pragma once

#include <string>
#include <string_view>

#include "bsnet/network.hpp"

namespace bsnet {

/// Parses the line-oriented network format:
///
///     # comment
///     a := b & !c
///     b := (a | c) ^ 1
///     c := c
///
/// Operators by increasing precedence are `|`, `^`, `&`, `!`. Components are
/// numbered in definition order and may be referenced before their
/// definition. Throws ParseError on syntax errors, undefined names and
/// duplicate definitions.
BooleanNetwork parse_bn(std::string_view text);

/// Writes one `name := expr` line per component. Output is stable: parsing
/// it rebuilds the same expression trees.
std::string serialize_bn(const BooleanNetwork& f);

/// Infix form of one expression using the network's component names.
std::string format_expr(const Expr& e, const BooleanNetwork& f);

}  // namespace bsnet
