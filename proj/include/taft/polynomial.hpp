#pragma once

#include <utility>
#include <vector>

#include "taft/rational.hpp"

namespace taft::poly {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of x^i.
/// Normal form has no trailing zeros, so the zero polynomial is {}.
using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
bool is_zero(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);

/// Euclidean division a = q*b + r with deg r < deg b. Throws
/// DivisionByZeroError when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Remainder of a modulo b.
Poly mod(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g;  // monic gcd
    Poly s;  // s*a + t*b == g
    Poly t;
};

Xgcd xgcd(const Poly& a, const Poly& b);

}  // namespace taft::poly
