#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germforge/polynomial.hpp"
#include "germforge/ring.hpp"

namespace germforge {

/// Parses the ASCII polynomial grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := uint ('/' uint)? | ident | '(' expr ')'
///
/// Whitespace is insignificant. Throws ParseError with the byte offset of the
/// offending token.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring);

/// Splits on commas at parenthesis depth zero, trimming whitespace.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

std::string trim(std::string_view s);

}  // namespace germforge
