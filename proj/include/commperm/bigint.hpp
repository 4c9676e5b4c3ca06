#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace commperm {

// Exact arithmetic everywhere: counts overflow 64 bits around n = 20,
// so all externally visible values are GMP integers / rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a division that must be exact leaves a remainder, or when a
// rational that must be an integer has a nontrivial denominator.  Either
// means a bug in the caller, never bad user input.
struct IntegralityError : std::logic_error {
    using std::logic_error::logic_error;
};

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);  // 0 when k > n
Int pow_int(const Int& base, unsigned long exp);

// a / b, throwing IntegralityError unless b divides a.
Int exact_div(const Int& a, const Int& b);

// r as an Int, throwing IntegralityError unless r is integral.
Int rat_to_int(const Rat& r);

std::string to_decimal(const Int& v);
// Parses a nonnegative decimal string; rejects signs, junk and empty input.
Int parse_decimal(const std::string& s);
// Canonical "num/den" (or plain "num" when den = 1).
std::string rat_to_string(const Rat& r);
Rat parse_rational(const std::string& s);

}  // namespace commperm
