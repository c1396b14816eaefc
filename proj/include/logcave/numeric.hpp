#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace logcave {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& value);

/// Canonical text form: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(const std::string& text);

BigInt power(const BigInt& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant by Gaussian elimination over the rationals. The empty matrix has determinant 1.
Rational determinant(RationalMatrix m);

/// Rank of a rectangular rational matrix.
std::size_t rank(RationalMatrix m);

/// 64-bit FNV-1a, used for report digests.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace logcave
