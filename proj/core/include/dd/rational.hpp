#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dd {

// Exact arithmetic for the rational pipelines (generalized Bernoulli numbers,
// EGF Taylor coefficients, values at non-positive integers). Backed by GMP.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Canonical decimal-free rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const BigRational& q);

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
BigRational rational_from_string(const std::string& text);

// num/den in canonical form (mpq arithmetic requires canonical operands).
BigRational frac(const BigInt& num, const BigInt& den);

// Row m of Pascal's triangle: C(m, 0..m), exact.
std::vector<BigInt> binomial_row(int m);

// b^e as an exact integer, e >= 0.
BigInt int_pow(unsigned long base, unsigned long exp);

}  // namespace dd
