#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polytrope {

// Exact arithmetic everywhere. Rationals are kept canonical (lowest terms,
// positive denominator), which mpq_class guarantees after canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p" or "p/q" with optional leading '-'. Throws ParseError on malformed
/// input or zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Serialize as "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

/// mpq_class(p, q) does not canonicalize; every fraction built from a raw
/// numerator/denominator pair must go through here.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& value) { return sgn(value); }

/// Exact sign of an integer-coefficient linear form at a rational point.
int sign_of_dot(const std::vector<int>& coeffs, const std::vector<Rational>& point);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace polytrope
