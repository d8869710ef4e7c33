#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace persist {

// All arithmetic in the library is exact. Rationals are GMP-backed and kept
// canonical (lowest terms, positive denominator) by construction.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Decimal notation is rejected on purpose: a
// silently rounded input would defeat every exactness guarantee downstream.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

// Lexicographic comparison of coordinate vectors, used for canonical ordering
// of vertices and rows.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace persist
