#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace addact {

using Q = mpq_class;
using Z = mpz_class;

Z factorial(unsigned n);

// "3", "-7/2"; denominator sign is normalized away.
Q parse_rational(const std::string& text);
std::string to_string(const Q& value);
std::string to_string(const Z& value);

// Rational roots of a polynomial with rational coefficients, given lowest
// degree first.  Used when splitting an algebra into local pieces.
std::vector<Q> rational_roots(const std::vector<Q>& coeffs);

}  // namespace addact
