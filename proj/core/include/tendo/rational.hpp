#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tendo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional leading sign, decimal digits, d != 0).
/// The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "n" or "n/d" form.
std::string to_string(const Rational& value);

/// Builds the canonical rational num/den.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Residue of the p-integral rational `value` modulo `modulus`, in [0, modulus).
/// The denominator must be invertible modulo `modulus`.
Integer residue_mod(const Rational& value, const Integer& modulus);

/// True if the rational is an integer.
bool is_integer(const Rational& value);

}  // namespace tendo
