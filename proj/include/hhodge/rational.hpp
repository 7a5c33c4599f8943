#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hhodge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational; throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms with q > 0; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
Rational fraction(long p, long q);

BigInt factorial(long n);
BigInt binomial(long n, long k);

/// base^exponent for a possibly negative exponent; base must be nonzero
/// when exponent < 0.
Rational power(const Rational& base, long exponent);

}  // namespace hhodge
