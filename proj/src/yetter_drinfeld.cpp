#include "taft/yetter_drinfeld.hpp"

#include "taft/errors.hpp"

namespace taft {

TensorElement yd_left_side(const Coaction& co, const TaftElement& h,
                           const AElement& a) {
    const CycContext& ctx = co.context();
    if (!ctx.same_field(h.context()) || !ctx.same_field(a.context()))
        throw ContextMismatchError("mixed contexts in YD check");

    const TensorElement ra = co.rho(a);
    TensorElement out(ctx, {Leg::H, Leg::A});
    for (const auto& [h1, h2, c] : coproduct_pairs(h)) {
        const TaftElement h2elt = c * TaftElement::monomial(ctx, h2.xpow, h2.gpow);
        for (const auto& [key, d] : ra.terms()) {
            auto front = mono_product(ctx, h1, key[0]);
            if (!front) continue;
            const AElement acted =
                h_action(h2elt, AElement::u_power(ctx, key[1].xpow));
            for (int m = 0; m < acted.dimension(); ++m) {
                if (acted.coeff(m).is_zero()) continue;
                out.add_term(
                    TensorElement::Key{front->first, XgMono{m, 0}},
                    d * front->second * acted.coeff(m));
            }
        }
    }
    return out;
}

TensorElement yd_right_side(const Coaction& co, const TaftElement& h,
                            const AElement& a) {
    const CycContext& ctx = co.context();
    if (!ctx.same_field(h.context()) || !ctx.same_field(a.context()))
        throw ContextMismatchError("mixed contexts in YD check");

    TensorElement out(ctx, {Leg::H, Leg::A});
    for (const auto& [h1, h2, c] : coproduct_pairs(h)) {
        const AElement acted =
            h_action(TaftElement::monomial(ctx, h1.xpow, h1.gpow), a);
        // (h_2 (x) 1) as an H (x) A element
        TensorElement h2_tensor(ctx, {Leg::H, Leg::A});
        h2_tensor.add_term(TensorElement::Key{h2, XgMono{0, 0}}, c);
        out += co.rho(acted) * h2_tensor;
    }
    return out;
}

CheckResult yd_condition_check(const Coaction& co, const TaftElement& h,
                               const AElement& a) {
    const TensorElement lhs = yd_left_side(co, h, a);
    const TensorElement rhs = yd_right_side(co, h, a);
    CheckResult r;
    r.pass = lhs == rhs;
    if (!r.pass)
        r.detail = "h.rho(a) = " + lhs.str() + " ; rho(h1.a)(h2(x)1) = " +
                   rhs.str();
    return r;
}

AElement braided_product(const Coaction& co, const AElement& a,
                         const AElement& b) {
    const CycContext& ctx = co.context();
    AElement out(ctx);
    const TensorElement ra = co.rho(a);
    for (const auto& [key, c] : ra.terms()) {
        const AElement acted =
            h_action(TaftElement::monomial(ctx, key[0].xpow, key[0].gpow), b);
        out += c * (acted * AElement::u_power(ctx, key[1].xpow));
    }
    return out;
}

CheckResult braided_commutativity_check(const Coaction& co, const AElement& a,
                                        const AElement& b) {
    const AElement plain = a * b;
    const AElement braided = braided_product(co, a, b);
    CheckResult r;
    r.pass = plain == braided;
    if (!r.pass)
        r.detail = "ab = " + plain.str() + " ; braided = " + braided.str();
    return r;
}

}  // namespace taft
