#pragma once

#include <string_view>
#include <vector>

#include "reesblow/polynomial.hpp"

namespace reesblow {

/// Parses the polynomial grammar documented in docs/grammar.md:
///
///   expr   := term (('+'|'-') term)*
///   term   := ['+'|'-'] factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | ident | '(' expr ')'
///
/// `t^-n` is read as u^n when the ring has a weight -1 variable named `u`
/// and no variable named `t`.
///
/// Throws SyntaxError, UnknownVariable, ZeroCharacteristicDivision.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ctx);

/// Comma-separated polynomial list, without surrounding brackets. An empty
/// or all-blank string yields an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ctx);

}  // namespace reesblow
