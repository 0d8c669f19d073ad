#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "taft/cyclotomic.hpp"
#include "taft/errors.hpp"
#include "taft/qcombinat.hpp"

namespace taft {

/// Basis monomial x^b g^a in normal form: 0 <= b, a <= n-1.
struct XgMono {
    int xpow = 0;
    int gpow = 0;
    friend auto operator<=>(const XgMono&, const XgMono&) = default;
};

/// Normal-form product of two basis monomials under
///   x^n = 0, g^n = 1, g^r x^s = w^{-rs} x^s g^r.
/// Returns nullopt when the product is annihilated by x^n = 0; otherwise
/// the resulting monomial and the scalar twist.
std::optional<std::pair<XgMono, CycScalar>> mono_product(const CycContext& ctx,
                                                         const XgMono& l,
                                                         const XgMono& r);

struct PrimalGenerators {
    static constexpr const char* x_name = "x";
    static constexpr const char* g_name = "g";
};
struct DualGenerators {
    static constexpr const char* x_name = "X";
    static constexpr const char* g_name = "G";
};

/// Element of a Taft-presented algebra: a linear combination of normal-form
/// monomials x^b g^a over Q(w), with zero terms pruned. The same machinery
/// serves the algebra itself and its (isomorphic) dual presentation; the
/// Names tag only changes rendering.
template <typename Names>
class SkewElement {
public:
    using TermMap = std::map<XgMono, CycScalar>;

    explicit SkewElement(CycContext ctx) : ctx_(std::move(ctx)) {}

    static SkewElement zero(const CycContext& ctx) { return SkewElement(ctx); }
    static SkewElement unit(const CycContext& ctx) {
        return monomial(ctx, 0, 0);
    }
    static SkewElement gen_x(const CycContext& ctx) {
        return monomial(ctx, 1, 0);
    }
    static SkewElement gen_g(const CycContext& ctx) {
        return monomial(ctx, 0, 1);
    }

    /// x^b g^a; b >= n collapses to zero, the g-exponent is reduced mod n.
    static SkewElement monomial(const CycContext& ctx, int xpow, int gpow) {
        SkewElement e(ctx);
        if (xpow < 0) throw std::invalid_argument("negative x-power");
        if (xpow >= ctx.order()) return e;
        int g = gpow % ctx.order();
        if (g < 0) g += ctx.order();
        e.terms_.emplace(XgMono{xpow, g}, ctx.one());
        return e;
    }

    const CycContext& context() const noexcept { return ctx_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^b g^a (zero scalar when absent).
    CycScalar coeff(int xpow, int gpow) const {
        auto it = terms_.find(XgMono{xpow, gpow});
        return it == terms_.end() ? ctx_.zero() : it->second;
    }

    void add_term(const XgMono& m, const CycScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SkewElement operator-() const {
        SkewElement e(ctx_);
        for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
        return e;
    }

    SkewElement& operator+=(const SkewElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SkewElement& operator-=(const SkewElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SkewElement& operator*=(const SkewElement& o) { return *this = *this * o; }

    friend SkewElement operator+(SkewElement a, const SkewElement& b) {
        return a += b;
    }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) {
        return a -= b;
    }

    friend SkewElement operator*(const SkewElement& a, const SkewElement& b) {
        a.check_same(b);
        SkewElement out(a.ctx_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                auto prod = mono_product(a.ctx_, ma, mb);
                if (!prod) continue;
                out.add_term(prod->first, ca * cb * prod->second);
            }
        }
        return out;
    }

    friend SkewElement operator*(const CycScalar& c, SkewElement e) {
        if (c.is_zero()) return SkewElement(e.ctx_);
        for (auto& [m, coeff] : e.terms_) coeff *= c;
        return e;
    }

    bool operator==(const SkewElement& o) const {
        check_same(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    SkewElement pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative element power");
        SkewElement acc = unit(ctx_);
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    /// Counit: eps(x^b g^a) = [b == 0], extended linearly.
    CycScalar counit() const {
        CycScalar out = ctx_.zero();
        for (const auto& [m, c] : terms_)
            if (m.xpow == 0) out += c;
        return out;
    }

    /// Antipode: S(g) = g^{-1}, S(x) = -g^{-1} x, extended as an
    /// anti-homomorphism via S(x^b g^a) = S(g)^a S(x)^b.
    SkewElement antipode() const {
        const SkewElement sg = monomial(ctx_, 0, -1);
        const SkewElement sx =
            -(ctx_.omega() * monomial(ctx_, 1, -1));  // -g^{-1}x normal-ordered
        return substitute_generators_anti(sx, sg);
    }

    /// Inverse antipode: S^{-1}(g) = g^{-1}, S^{-1}(x) = -x g^{-1}.
    SkewElement antipode_inverse() const {
        const SkewElement sg = monomial(ctx_, 0, -1);
        const SkewElement sx = -monomial(ctx_, 1, -1);
        return substitute_generators_anti(sx, sg);
    }

    /// Anti-multiplicative substitution: c x^b g^a -> c img_g^a img_x^b.
    SkewElement substitute_generators_anti(const SkewElement& img_x,
                                           const SkewElement& img_g) const {
        SkewElement out(ctx_);
        for (const auto& [m, c] : terms_)
            out += c * (img_g.pow(m.gpow) * img_x.pow(m.xpow));
        return out;
    }

    /// Multiplicative substitution: c x^b g^a -> c img_x^b img_g^a.
    SkewElement substitute_generators_hom(const SkewElement& img_x,
                                          const SkewElement& img_g) const {
        SkewElement out(ctx_);
        for (const auto& [m, c] : terms_)
            out += c * (img_x.pow(m.xpow) * img_g.pow(m.gpow));
        return out;
    }

    /// "x^2 g", coefficient-prefixed, terms in (xpow, gpow) order. Stable.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << render_term(m, c);
        }
        return out.str();
    }

private:
    CycContext ctx_;
    TermMap terms_;

    void check_same(const SkewElement& o) const {
        if (!ctx_.same_field(o.ctx_))
            throw ContextMismatchError("elements belong to different contexts");
    }

    static std::string render_power(const char* name, int p) {
        if (p == 0) return {};
        if (p == 1) return name;
        return std::string(name) + "^" + std::to_string(p);
    }

    static std::string render_term(const XgMono& m, const CycScalar& c) {
        std::string mono = render_power(Names::x_name, m.xpow);
        std::string gpart = render_power(Names::g_name, m.gpow);
        if (!gpart.empty()) {
            if (!mono.empty()) mono += " ";
            mono += gpart;
        }
        std::string cs = c.str();
        if (mono.empty()) return "(" + cs + ")";
        if (cs == "1") return mono;
        return "(" + cs + ")*" + mono;
    }
};

using TaftElement = SkewElement<PrimalGenerators>;
using DualElement = SkewElement<DualGenerators>;

/// Coproduct expanded over basis monomials:
///   Delta(x^b g^a) = sum_k w^{-k(b-k)} (b choose k)_w
///                    x^{b-k} g^{k+a} (x) x^k g^a,
/// returned as (left, right, coefficient) triples. Works identically for
/// the dual presentation.
template <typename Names>
std::vector<std::tuple<XgMono, XgMono, CycScalar>> coproduct_pairs(
    const SkewElement<Names>& p) {
    const CycContext& ctx = p.context();
    const int n = ctx.order();
    std::vector<std::tuple<XgMono, XgMono, CycScalar>> out;
    for (const auto& [m, c] : p.terms()) {
        for (int k = 0; k <= m.xpow; ++k) {
            CycScalar coeff = c *
                              ctx.omega_pow(-static_cast<long long>(k) *
                                            (m.xpow - k)) *
                              gaussian_binomial(ctx, m.xpow, k);
            if (coeff.is_zero()) continue;
            out.emplace_back(XgMono{m.xpow - k, (k + m.gpow) % n},
                             XgMono{k, m.gpow}, std::move(coeff));
        }
    }
    return out;
}

}  // namespace taft
