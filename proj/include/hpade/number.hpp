#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace hpade {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// Variable-precision MPFR float; precision is set per scope, see PrecisionGuard.
using Float = boost::multiprecision::mpfr_float;

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

// RAII scope for Float working precision (decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(Float::default_precision()) {
        Float::default_precision(digits10);
    }
    ~PrecisionGuard() { Float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Parses "p/q", integers, plain decimals ("1.25") and scientific decimals
// ("1e-30", "2.5e3") into an exact Rational.
Rational parse_rational(const std::string& text);

// Exact rational as a string "p/q" (or "p" when q == 1).
std::string rational_string(const Rational& q);

// Fixed-point decimal rendering with the given number of fractional digits.
std::string fixed_digits(const Float& x, int digits);

Float to_float(const Rational& q);

// Dyadic rational strictly inside (lo, hi), near the midpoint.  Keeps
// denominators powers of two across repeated bisection.
Rational dyadic_midpoint(const Rational& lo, const Rational& hi);

// The rational with smallest denominator strictly inside (lo, hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace hpade
