#pragma once

#include <memory>
#include <string>
#include <vector>

#include "taft/polynomial.hpp"
#include "taft/rational.hpp"

namespace taft {

class CycScalar;

int euler_phi(int n);

/// Exponents t with gcd(t, n) = 1, ascending; omega = zeta^t runs over all
/// primitive n-th roots as t runs over this list.
std::vector<int> primitive_root_exponents(int n);

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the product of all lower-order cyclotomic polynomials. Throws
/// InvalidOrderError for n < 2.
poly::Poly cyclotomic_polynomial(int n);

/// Arithmetic context for the field Q(w) = Q[x]/Phi_n(x). The residue class
/// of x is a primitive n-th root of unity zeta; the working root is
/// omega = zeta^t for a chosen exponent t coprime to n. Immutable and
/// freely shareable across threads.
class CycContext {
public:
    explicit CycContext(int order, int root_exponent = 1);

    int order() const noexcept;          // n
    int root_exponent() const noexcept;  // t
    int degree() const noexcept;         // phi(n) = deg Phi_n
    const poly::Poly& modulus() const noexcept;

    CycScalar zero() const;
    CycScalar one() const;
    CycScalar from_rational(const Rational& r) const;
    CycScalar from_integer(long v) const;

    /// omega^k for any integer k; the exponent is reduced mod n.
    CycScalar omega_pow(long long k) const;
    CycScalar omega() const;

    /// Same field and same working root.
    bool same_field(const CycContext& other) const noexcept;

private:
    struct Data {
        int n = 0;
        int t = 1;
        poly::Poly phi;
        // zeta_pow[j] = coefficients of x^j mod Phi_n, padded to degree().
        std::vector<std::vector<Rational>> zeta_pow;
    };
    std::shared_ptr<const Data> data_;

    friend class CycScalar;
};

/// An element of Q(w), stored as the reduced coefficient vector of a
/// polynomial in the field generator (length = phi(n), degree < phi(n)).
/// Canonical form makes equality and the zero test exact.
class CycScalar {
public:
    CycScalar(CycContext ctx, std::vector<Rational> coeffs);

    const CycContext& context() const noexcept { return ctx_; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    /// Multiplicative inverse via extended gcd with Phi_n. Throws
    /// DivisionByZeroError on zero.
    CycScalar inverse() const;

    /// Integer power; negative exponents go through inverse().
    CycScalar pow(long long e) const;

    /// Deterministic rendering as a polynomial in w, ascending powers,
    /// rational coefficients in lowest terms: "0", "2", "1 + w", "-1/3*w^2".
    std::string str() const;

private:
    CycContext ctx_;
    std::vector<Rational> c_;

    void check_same(const CycScalar& o) const;
};

}  // namespace taft
