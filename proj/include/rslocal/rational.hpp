#pragma once

#include <gmpxx.h>

#include <string>

namespace rslocal {

/// Exact rational coefficients. GMP keeps mpq_class canonical under
/// arithmetic; only raw (num, den) construction needs canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// q^e for integer e (negative exponents allowed), q > 0.
Rat rat_pow(unsigned long long base, long long exp);

/// "a" or "a/b"; canonical (b > 0, gcd(a,b) = 1).
std::string rat_to_string(const Rat& r);

/// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument.
Rat rat_from_string(const std::string& text);

}  // namespace rslocal
