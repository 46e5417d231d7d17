#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace apparent_loci {

/// Arbitrary precision integers and rationals (GMP). mpq_class keeps the
/// numerator/denominator coprime with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "a", "-a", "a/b" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Exact square root in Q, if any.
std::optional<Rational> exact_sqrt(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace apparent_loci
