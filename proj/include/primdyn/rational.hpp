#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace primdyn {

// Exact arbitrary-precision rational, canonical form (reduced, positive
// denominator) maintained by GMP.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "13/100", "-3", "0.13", "1.9", "2e3"-free plain forms only.
// Decimal literals convert exactly (0.13 -> 13/100).
Rat parse_rat(std::string_view s);

std::string rat_str(const Rat& q);

// Decimal expansion with the given number of fractional digits, truncated
// toward zero ("0.1822033898" for 43/236, digits=10).
std::string rat_decimal(const Rat& q, int digits);

Rat rat_pow(const Rat& base, long exp);

// q == p / 2^k with p odd or zero?
bool is_dyadic(const Rat& q);

// log2 of a positive rational, accurate to double precision regardless of
// operand size.
double rat_log2(const Rat& q);

}  // namespace primdyn
