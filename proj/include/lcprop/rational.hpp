#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lcprop {

// Exact rational scalar. Everything in this library is computed over Rat;
// there are no tolerances anywhere.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "num", "-num" or "num/den" (base 10). Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical text form: "5/8", "15", "-3/7".
std::string rat_str(const Rat& q);

/// Display-only decimal approximation with `digits` places, marked with '~'.
std::string rat_decimal(const Rat& q, int digits);

/// q^e for e >= 0 (0^0 == 1).
Rat rat_pow(const Rat& q, long e);

/// Binomial coefficient as an exact rational; zero outside 0 <= k <= n.
Rat binom(long n, long k);

/// Reduced rational from a num/den pair. The raw two-argument mpq_class
/// constructor does not canonicalize, and GMP comparisons assume canonical
/// operands, so every num/den pair must come through here.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace lcprop
