#pragma once

#include <string>

#include "specht/field.hpp"
#include "specht/monomial.hpp"
#include "specht/polynomial.hpp"

namespace specht {

/// Parses the ASCII polynomial grammar: variables x<k> (1 <= k <= n),
/// integer literals, binary + - * ^ and parentheses, with ^ tightest, then *,
/// then +/-. A leading sign is permitted at the start of any (sub)expression.
/// Implicit multiplication is rejected. Exponents are non-negative integer
/// literals. Throws ParseError with a 0-based position on bad input.
Polynomial parse_polynomial(const std::string& text, int n, const Field& K,
                            const MonomialOrder& order);

/// Same, with the default lex order x_n > ... > x_1.
Polynomial parse_polynomial(const std::string& text, int n, const Field& K);

/// Same, over the rationals.
Polynomial parse_polynomial(const std::string& text, int n);

}  // namespace specht
