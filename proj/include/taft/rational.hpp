#pragma once

#include <gmpxx.h>

#include <string>

namespace taft {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator.
using Rational = mpq_class;

/// Builds a canonical rational from a possibly non-reduced pair.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "3", "-1/2", "0" — exactly GMP's canonical rendering.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace taft
