#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hkmod {

// Exact arithmetic only: every quantity in the library is an Integer or a
// Rational, and Rational values are always reduced with positive denominator
// (mpq_class keeps results canonical).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// "p/q" with the "/q" dropped when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "p" or "p/q" with optional leading '-'; rejects everything else
// (including decimals) so no rounding can sneak in.
std::optional<Rational> parse_rational(const std::string& text);

// floor(p/q) and ceil(p/q) as integers; q may be any nonzero rational.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// floor(sqrt(x)) for x >= 0; equals isqrt(floor(x)) exactly.
Integer isqrt_floor(const Rational& x);

inline int sign_of(const Rational& q) { return sgn(q); }

Integer gcd_of(const Integer& a, const Integer& b);
Integer factorial_of(unsigned n);

}  // namespace hkmod
