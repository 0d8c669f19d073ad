#pragma once

#include "taft/comodule.hpp"

namespace taft {

/// Left side of the compatibility condition: h acting on rho(a) in H (x) A,
/// through Delta(h) — the H factor of each coproduct leg multiplies the
/// H slot, the other leg acts on the A slot.
TensorElement yd_left_side(const Coaction& co, const TaftElement& h,
                           const AElement& a);

/// Right side: sum over Delta(h) of rho(h_1 . a) * (h_2 (x) 1).
TensorElement yd_right_side(const Coaction& co, const TaftElement& h,
                            const AElement& a);

CheckResult yd_condition_check(const Coaction& co, const TaftElement& h,
                               const AElement& a);

/// The braided product sum (a_{-1} . b) a_0 computed from rho(a).
AElement braided_product(const Coaction& co, const AElement& a,
                         const AElement& b);

/// Compares a*b with the braided product.
CheckResult braided_commutativity_check(const Coaction& co, const AElement& a,
                                        const AElement& b);

}  // namespace taft
