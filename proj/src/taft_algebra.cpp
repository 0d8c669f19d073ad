#include "taft/taft_algebra.hpp"

namespace taft {

std::optional<std::pair<XgMono, CycScalar>> mono_product(const CycContext& ctx,
                                                         const XgMono& l,
                                                         const XgMono& r) {
    const int n = ctx.order();
    if (l.xpow + r.xpow >= n) return std::nullopt;
    // (x^b g^a)(x^d g^c) = w^{-ad} x^{b+d} g^{a+c}
    CycScalar twist =
        ctx.omega_pow(-static_cast<long long>(l.gpow) * r.xpow);
    return std::make_pair(XgMono{l.xpow + r.xpow, (l.gpow + r.gpow) % n},
                          std::move(twist));
}

}  // namespace taft
