#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace irrmeasure {

using Integer = mpz_class;
// mpq_class keeps num/den canonical (den > 0, gcd = 1) after every operation.
using Rat = mpq_class;

Integer floor(const Rat& x);
Integer ceil(const Rat& x);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

Integer pow2(unsigned long bits);
Integer pow10(unsigned long digits);

// Rat built from a (possibly unnormalized) fraction.
Rat make_rat(const Integer& num, const Integer& den);

int sign(const Integer& x);
int sign(const Rat& x);

std::string to_string(const Integer& x);
// "n" or "n/d".
std::string to_string(const Rat& x);

// Parses "n", "-n", "n/d" or a finite decimal "0.06"; throws Error(ParseError).
Rat parse_rat(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace irrmeasure
