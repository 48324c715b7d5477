#pragma once

#include <gmpxx.h>
#include <string>

namespace blues {

// Exact scalar substrate. mpq_class keeps values reduced with a positive
// denominator once canonicalized; every constructor path below canonicalizes.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational rational_from_string(const std::string& text);

// Prints as "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

}  // namespace blues
