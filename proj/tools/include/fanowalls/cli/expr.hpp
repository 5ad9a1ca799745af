#pragma once

// Class expressions on the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := ('+' | '-')? factor ('*' factor)*
//   factor := number | 'k1' | 'k2' | 'pt' | 'O(' int ')' | 'ch(' num ',' num ',' num ',' num ')'
//           | '(' expr ')'
//   number := int ('/' int)?
//
// Products may contain at most one class; the whole expression must be a
// class. Whitespace is ignored.

#include <string_view>

#include "fanowalls/numclass.hpp"

namespace fanowalls::cli {

/// Throws ParseError with the offending position.
numclass::ChernCharacter parse_class(const numclass::FanoContext& ctx, std::string_view text);

}  // namespace fanowalls::cli
