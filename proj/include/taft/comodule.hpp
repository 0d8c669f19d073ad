#pragma once

#include <string>

#include "taft/quantum_plane.hpp"
#include "taft/tensor.hpp"

namespace taft {

/// Outcome of a single structural check, with both sides rendered so a
/// failure is diagnosable from the report alone.
struct CheckResult {
    bool pass = false;
    std::string detail;
};

/// The coaction rho: A -> H (x) A determined by
///   rho(u) = sum_{i=0}^{n-1} a_i x^i g^{-(i+1)} (x) u^{i+1},
/// extended multiplicatively (rho(u^m) = rho(u)^m, rho(1) = 1 (x) 1).
/// A perturbed variant is available for negative-control tests.
class Coaction {
public:
    explicit Coaction(const CycContext& ctx);

    /// Standard coaction with the a_i coefficient of term `index` scaled
    /// by `factor`; used to demonstrate that the verification suite is
    /// sensitive to the exact coefficient family.
    static Coaction with_scaled_term(const CycContext& ctx, int index,
                                     const CycScalar& factor);

    const CycContext& context() const noexcept { return ctx_; }
    const TensorElement& rho_u() const noexcept { return rho_u_; }

    /// rho on an arbitrary element, through the basis expansion and
    /// multiplicativity.
    TensorElement rho(const AElement& a) const;

    /// Direct tensor power rho(u)^s, s >= 0.
    TensorElement rho_power(int s) const;

    /// Closed form of rho(u)^s as a single sum over x-degrees, the inner
    /// weight being a composition sum over s parts. Requires 1 <= s <= n.
    TensorElement rho_power_closed(int s) const;

private:
    Coaction(CycContext ctx, TensorElement rho_u);

    CycContext ctx_;
    TensorElement rho_u_;
};

/// Compares (id (x) rho)rho(u^m) with (Delta (x) id)rho(u^m) in H(x)H(x)A.
CheckResult comodule_axiom_on(const Coaction& co, int m);

/// Checks (eps (x) id)rho(u^m) == u^m.
CheckResult counit_axiom_on(const Coaction& co, int m);

/// (eps (x) id) applied to an H (x) A element.
AElement counit_contract(const TensorElement& t);

/// The two sides of the main identity grid: the composition sum over s+1
/// parts, and the Gaussian binomial (k+s choose k)_w when k+s < n, else 0.
CycScalar main_identity_lhs(const CycContext& ctx, long k, long s);
CycScalar main_identity_rhs(const CycContext& ctx, long k, long s);

}  // namespace taft
