#include "taft/comodule.hpp"

#include <stdexcept>

#include "taft/qcombinat.hpp"

namespace taft {

namespace {

// a_i x^i g^{-(i+1)} (x) u^{i+1} summed over i = 0..n-1, with an optional
// scaling of one term's coefficient.
TensorElement build_rho_u(const CycContext& ctx, int scaled_index,
                          const CycScalar* factor) {
    const int n = ctx.order();
    TensorElement out(ctx, {Leg::H, Leg::A});
    for (int i = 0; i < n; ++i) {
        CycScalar c = a_coefficient(ctx, i);
        if (factor != nullptr && i == scaled_index) c *= *factor;
        int gexp = (-(i + 1)) % n;
        if (gexp < 0) gexp += n;
        int upow = (i + 1) % n;
        if (i + 1 >= n) c *= ctx.omega();  // u^n = w wraps the last term
        out.add_term(TensorElement::Key{XgMono{i, gexp}, XgMono{upow, 0}}, c);
    }
    return out;
}

}  // namespace

Coaction::Coaction(const CycContext& ctx)
    : ctx_(ctx), rho_u_(build_rho_u(ctx, -1, nullptr)) {}

Coaction::Coaction(CycContext ctx, TensorElement rho_u)
    : ctx_(std::move(ctx)), rho_u_(std::move(rho_u)) {}

Coaction Coaction::with_scaled_term(const CycContext& ctx, int index,
                                    const CycScalar& factor) {
    return Coaction(ctx, build_rho_u(ctx, index, &factor));
}

TensorElement Coaction::rho(const AElement& a) const {
    TensorElement out(ctx_, {Leg::H, Leg::A});
    for (int m = 0; m < a.dimension(); ++m) {
        if (a.coeff(m).is_zero()) continue;
        out += a.coeff(m) * rho_power(m);
    }
    return out;
}

TensorElement Coaction::rho_power(int s) const { return rho_u_.pow(s); }

TensorElement Coaction::rho_power_closed(int s) const {
    const int n = ctx_.order();
    if (s < 1 || s > n)
        throw std::invalid_argument("closed form needs 1 <= s <= n");
    TensorElement out(ctx_, {Leg::H, Leg::A});
    for (int k = 0; k < n; ++k) {
        CycScalar c =
            a_coefficient(ctx_, k) * composition_sum_parts(ctx_, k, s);
        if (c.is_zero()) continue;
        int gexp = (-(k + s)) % n;
        if (gexp < 0) gexp += n;
        int upow = (k + s) % n;
        if (k + s >= n) c *= ctx_.omega_pow((k + s) / n);
        out.add_term(TensorElement::Key{XgMono{k, gexp}, XgMono{upow, 0}}, c);
    }
    return out;
}

CheckResult comodule_axiom_on(const Coaction& co, int m) {
    const TensorElement base = co.rho(AElement::u_power(co.context(), m));
    // (id (x) rho): expand the A slot through the coaction.
    TensorElement lhs = base.apply_to_slot(1, [&](const XgMono& umono) {
        return co.rho_power(umono.xpow);
    });
    // (Delta (x) id): expand the H slot through the coproduct.
    TensorElement rhs = base.apply_to_slot(0, [&](const XgMono& hmono) {
        return coproduct(
            TaftElement::monomial(co.context(), hmono.xpow, hmono.gpow));
    });
    CheckResult r;
    r.pass = lhs == rhs;
    if (!r.pass)
        r.detail = "(id(x)rho)rho = " + lhs.str() + " ; (Delta(x)id)rho = " +
                   rhs.str();
    return r;
}

AElement counit_contract(const TensorElement& t) {
    if (t.arity() != 2 || t.legs()[0] != Leg::H || t.legs()[1] != Leg::A)
        throw KindMismatchError("counit contraction expects an H(x)A element");
    AElement out(t.context());
    for (const auto& [key, c] : t.terms()) {
        if (key[0].xpow != 0) continue;  // eps kills positive x-powers
        out += c * AElement::u_power(t.context(), key[1].xpow);
    }
    return out;
}

CheckResult counit_axiom_on(const Coaction& co, int m) {
    const AElement expected = AElement::u_power(co.context(), m);
    const AElement got = counit_contract(co.rho(expected));
    CheckResult r;
    r.pass = got == expected;
    if (!r.pass)
        r.detail = "(eps(x)id)rho(u^" + std::to_string(m) + ") = " + got.str();
    return r;
}

CycScalar main_identity_lhs(const CycContext& ctx, long k, long s) {
    return composition_sum(ctx, k, s);
}

CycScalar main_identity_rhs(const CycContext& ctx, long k, long s) {
    if (k + s < ctx.order()) return gaussian_binomial(ctx, k + s, k);
    return ctx.zero();
}

}  // namespace taft
