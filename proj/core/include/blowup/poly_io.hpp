#pragma once

#include <map>
#include <string>

#include "blowup/graded_poly.hpp"

namespace blowup {

/// Name -> generator lookup used when parsing class expressions. Names are
/// unique across a computation (spaces use disjoint symbol sets).
using GeneratorTable = std::map<std::string, Generator>;

/// Parses a polynomial written as signed terms `k*g1^a*g2^b`, e.g.
/// "1 + 3*h - h^2" or "2*hN". Integers are arbitrary precision. Unknown
/// identifiers raise ScenarioError with the offending position; the grammar
/// has no parentheses.
GradedPoly parse_poly(const std::string& text, const GeneratorTable& table, Coeff mode);

/// Parses a single monomial with coefficient 1 (integral-table keys,
/// pushforward-table keys).
Monomial parse_monomial(const std::string& text, const GeneratorTable& table);

} // namespace blowup
