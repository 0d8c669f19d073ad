#pragma once

#include <string>
#include <vector>

#include "taft/cyclotomic.hpp"
#include "taft/taft_algebra.hpp"

namespace taft {

/// Element of A = k[z]/(z^n - w), written on the basis {1, u, ..., u^{n-1}}.
/// Multiplication wraps through u^n = w. Commutative as a plain algebra.
class AElement {
public:
    explicit AElement(CycContext ctx);

    static AElement zero(const CycContext& ctx) { return AElement(ctx); }
    static AElement one(const CycContext& ctx);
    /// u^m for any m >= 0; powers past n-1 pick up a factor w per wrap.
    static AElement u_power(const CycContext& ctx, long m);

    const CycContext& context() const noexcept { return ctx_; }
    int dimension() const noexcept { return static_cast<int>(coeffs_.size()); }
    const CycScalar& coeff(int m) const { return coeffs_.at(m); }
    void set_coeff(int m, CycScalar value) { coeffs_.at(m) = std::move(value); }
    bool is_zero() const;

    AElement operator-() const;
    AElement& operator+=(const AElement& o);
    AElement& operator-=(const AElement& o);
    AElement& operator*=(const AElement& o);
    friend AElement operator+(AElement a, const AElement& b) { return a += b; }
    friend AElement operator-(AElement a, const AElement& b) { return a -= b; }
    friend AElement operator*(AElement a, const AElement& b) { return a *= b; }
    friend AElement operator*(const CycScalar& c, AElement a);

    bool operator==(const AElement& o) const;
    bool operator!=(const AElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    CycContext ctx_;
    std::vector<CycScalar> coeffs_;  // index m holds the coefficient of u^m

    void check_same(const AElement& o) const;
};

/// a_i = (w - 1)^i w^{i(i+1)/2}, defined for every i >= 0.
CycScalar a_coefficient(const CycContext& ctx, long i);

/// Generator actions: g.u^m = w^m u^m; x.u^m = (m)_w u^{m-1}, x.1 = 0.
AElement act_g(const AElement& a);
AElement act_x(const AElement& a);

/// Module action of H: a monomial x^b g^a acts as b applications of x
/// after a applications of g, extended bilinearly.
AElement h_action(const TaftElement& h, const AElement& a);

}  // namespace taft
