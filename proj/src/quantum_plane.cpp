#include "taft/quantum_plane.hpp"

#include <sstream>

#include "taft/errors.hpp"
#include "taft/qcombinat.hpp"

namespace taft {

AElement::AElement(CycContext ctx)
    : ctx_(std::move(ctx)), coeffs_(ctx_.order(), ctx_.zero()) {}

AElement AElement::one(const CycContext& ctx) {
    AElement a(ctx);
    a.coeffs_[0] = ctx.one();
    return a;
}

AElement AElement::u_power(const CycContext& ctx, long m) {
    if (m < 0) throw std::invalid_argument("negative u-power");
    const int n = ctx.order();
    AElement a(ctx);
    // u^n = w, so each wrap contributes one factor of w.
    a.coeffs_[m % n] = ctx.omega_pow(m / n);
    return a;
}

bool AElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void AElement::check_same(const AElement& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw ContextMismatchError("A-elements belong to different contexts");
}

AElement AElement::operator-() const {
    AElement a(ctx_);
    for (int m = 0; m < dimension(); ++m) a.coeffs_[m] = -coeffs_[m];
    return a;
}

AElement& AElement::operator+=(const AElement& o) {
    check_same(o);
    for (int m = 0; m < dimension(); ++m) coeffs_[m] += o.coeffs_[m];
    return *this;
}

AElement& AElement::operator-=(const AElement& o) {
    check_same(o);
    for (int m = 0; m < dimension(); ++m) coeffs_[m] -= o.coeffs_[m];
    return *this;
}

AElement& AElement::operator*=(const AElement& o) {
    check_same(o);
    const int n = dimension();
    std::vector<CycScalar> out(n, ctx_.zero());
    const CycScalar wrap = ctx_.omega();
    for (int p = 0; p < n; ++p) {
        if (coeffs_[p].is_zero()) continue;
        for (int q = 0; q < n; ++q) {
            if (o.coeffs_[q].is_zero()) continue;
            CycScalar c = coeffs_[p] * o.coeffs_[q];
            if (p + q >= n)
                out[p + q - n] += wrap * c;
            else
                out[p + q] += c;
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

AElement operator*(const CycScalar& c, AElement a) {
    for (auto& coeff : a.coeffs_) coeff *= c;
    return a;
}

bool AElement::operator==(const AElement& o) const {
    check_same(o);
    return coeffs_ == o.coeffs_;
}

std::string AElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int m = 0; m < dimension(); ++m) {
        if (coeffs_[m].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = coeffs_[m].str();
        if (m == 0) {
            out << "(" << cs << ")";
            continue;
        }
        std::string mono = m == 1 ? "u" : "u^" + std::to_string(m);
        if (cs == "1")
            out << mono;
        else
            out << "(" << cs << ")*" << mono;
    }
    return out.str();
}

CycScalar a_coefficient(const CycContext& ctx, long i) {
    if (i < 0) throw std::invalid_argument("a_coefficient needs i >= 0");
    CycScalar base = ctx.omega() - ctx.one();
    const long long tri = static_cast<long long>(i) * (i + 1) / 2;
    return base.pow(i) * ctx.omega_pow(tri);
}

AElement act_g(const AElement& a) {
    const CycContext& ctx = a.context();
    AElement out(ctx);
    for (int m = 0; m < a.dimension(); ++m)
        out.set_coeff(m, ctx.omega_pow(m) * a.coeff(m));
    return out;
}

AElement act_x(const AElement& a) {
    const CycContext& ctx = a.context();
    AElement out(ctx);
    for (int m = 1; m < a.dimension(); ++m)
        out.set_coeff(m - 1, q_integer(ctx, m) * a.coeff(m));
    return out;
}

AElement h_action(const TaftElement& h, const AElement& a) {
    if (!h.context().same_field(a.context()))
        throw ContextMismatchError("action across different contexts");
    AElement out(a.context());
    for (const auto& [mono, c] : h.terms()) {
        AElement cur = a;
        for (int i = 0; i < mono.gpow; ++i) cur = act_g(cur);
        for (int i = 0; i < mono.xpow; ++i) cur = act_x(cur);
        out += c * cur;
    }
    return out;
}

}  // namespace taft
