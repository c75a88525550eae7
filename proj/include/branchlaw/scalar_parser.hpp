#pragma once

#include <string_view>

#include "branchlaw/cyclotomic.hpp"

namespace branchlaw {

/// Parses a scalar literal of the group and table file grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | '(' expr ')' | 'E(' integer ')' | 'Sqrt(' integer ')'
///
/// Whitespace between tokens is ignored. Throws ParseError with the column of
/// the offending character.
Cyclotomic parse_scalar(std::string_view text);

}  // namespace branchlaw
