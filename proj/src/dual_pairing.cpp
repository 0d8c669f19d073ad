#include "taft/dual_pairing.hpp"

#include <utility>

#include "taft/errors.hpp"

namespace taft {

PairingTable::PairingTable(CycContext ctx) : ctx_(std::move(ctx)) {}

CycScalar PairingTable::single_g(const XgMono& primal) const {
    // <G, h k> = <G, h><G, k> (G is grouplike), so x-generators contribute
    // <G, x> = 0 and each g contributes <G, g> = w^{-1}.
    if (primal.xpow > 0) return ctx_.zero();
    return ctx_.omega_pow(-primal.gpow);
}

CycScalar PairingTable::single_x(const XgMono& primal) const {
    // Peel the primal monomial left to right through
    // <X, h k> = <X, h> eps(k) + <G, h><X, k>.
    if (primal.xpow == 0 && primal.gpow == 0) return ctx_.zero();  // eps*(X)
    if (primal.xpow > 0) {
        // h = x, k = x^{d-1} g^c: <X, x> eps(k) + <G, x><X, k> = eps(k)
        return primal.xpow == 1 ? ctx_.one() : ctx_.zero();
    }
    // h = g, k = g^{c-1}: <X, g> eps(k) + <G, g><X, k> = w^{-1} <X, k>
    XgMono rest{0, primal.gpow - 1};
    return ctx_.omega_pow(-1) * single_x(rest);
}

CycScalar PairingTable::mono(const XgMono& dual, const XgMono& primal) const {
    const std::array<int, 4> key{dual.xpow, dual.gpow, primal.xpow,
                                 primal.gpow};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    CycScalar result = ctx_.zero();
    if (dual.xpow == 0 && dual.gpow == 0) {
        // <1, h> = eps(h)
        result = primal.xpow == 0 ? ctx_.one() : ctx_.zero();
    } else {
        // Peel one dual generator: F = gen * F'.
        const bool peel_x = dual.xpow > 0;
        const XgMono rest =
            peel_x ? XgMono{dual.xpow - 1, dual.gpow} : XgMono{0, dual.gpow - 1};
        const TaftElement h =
            TaftElement::monomial(ctx_, primal.xpow, primal.gpow);
        for (const auto& [h1, h2, c] : coproduct_pairs(h)) {
            const CycScalar lead = peel_x ? single_x(h1) : single_g(h1);
            if (lead.is_zero()) continue;
            result += c * lead * mono(rest, h2);
        }
    }
    memo_.emplace(key, result);
    return result;
}

CycScalar pairing(const PairingTable& table, const DualElement& f,
                  const TaftElement& h) {
    if (!f.context().same_field(h.context()) ||
        !f.context().same_field(table.context()))
        throw ContextMismatchError("pairing across different contexts");
    CycScalar out = table.context().zero();
    for (const auto& [fm, fc] : f.terms())
        for (const auto& [hm, hc] : h.terms()) out += fc * hc * table.mono(fm, hm);
    return out;
}

CycScalar pairing(const DualElement& f, const TaftElement& h) {
    PairingTable table(f.context());
    return pairing(table, f, h);
}

CycScalar pairing_via_primal_product(const PairingTable& table,
                                     const DualElement& f,
                                     const TaftElement& h,
                                     const TaftElement& k) {
    CycScalar out = table.context().zero();
    for (const auto& [f1, f2, c] : coproduct_pairs(f)) {
        const DualElement left =
            DualElement::monomial(table.context(), f1.xpow, f1.gpow);
        const DualElement right =
            DualElement::monomial(table.context(), f2.xpow, f2.gpow);
        out += c * pairing(table, left, h) * pairing(table, right, k);
    }
    return out;
}

CycScalar pairing_via_dual_product(const PairingTable& table,
                                   const DualElement& f, const DualElement& fp,
                                   const TaftElement& h) {
    CycScalar out = table.context().zero();
    for (const auto& [h1, h2, c] : coproduct_pairs(h)) {
        out += c *
               pairing(table, f,
                       TaftElement::monomial(table.context(), h1.xpow, h1.gpow)) *
               pairing(table, fp,
                       TaftElement::monomial(table.context(), h2.xpow, h2.gpow));
    }
    return out;
}

int gram_rank(const CycContext& ctx) {
    const int n = ctx.order();
    const int dim = n * n;
    PairingTable table(ctx);
    std::vector<std::vector<CycScalar>> m;
    m.reserve(dim);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            std::vector<CycScalar> row;
            row.reserve(dim);
            for (int d = 0; d < n; ++d)
                for (int c = 0; c < n; ++c)
                    row.push_back(table.mono(XgMono{b, a}, XgMono{d, c}));
            m.push_back(std::move(row));
        }

    int rank = 0;
    for (int col = 0; col < dim && rank < dim; ++col) {
        int pivot = -1;
        for (int row = rank; row < dim; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const CycScalar inv = m[rank][col].inverse();
        for (int row = rank + 1; row < dim; ++row) {
            if (m[row][col].is_zero()) continue;
            const CycScalar factor = m[row][col] * inv;
            for (int c2 = col; c2 < dim; ++c2)
                m[row][c2] -= factor * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

CycScalar grouplike_gram_determinant(const CycContext& ctx) {
    const int n = ctx.order();
    std::vector<std::vector<CycScalar>> m;
    for (int a = 0; a < n; ++a) {
        std::vector<CycScalar> row;
        for (int c = 0; c < n; ++c)
            row.push_back(ctx.omega_pow(-static_cast<long long>(a) * c));
        m.push_back(std::move(row));
    }
    CycScalar det = ctx.one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return ctx.zero();
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        const CycScalar inv = m[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            const CycScalar factor = m[row][col] * inv;
            for (int c2 = col; c2 < n; ++c2)
                m[row][c2] -= factor * m[col][c2];
        }
    }
    return det;
}

namespace {

// X and G on basis powers, by the product rule recursion. Index m holds
// the image of u^m.
std::vector<AElement> dual_images_on_basis(const CycContext& ctx, bool is_X) {
    const int n = ctx.order();
    const AElement u = AElement::u_power(ctx, 1);
    std::vector<AElement> G_img, X_img;
    G_img.push_back(AElement::one(ctx));   // G.1 = eps*(G) 1 = 1
    X_img.push_back(AElement::zero(ctx));  // X.1 = eps*(X) 1 = 0
    const AElement Gu = ctx.omega_pow(-1) * u;
    AElement Xu(ctx);
    Xu += (ctx.omega_pow(-1) - ctx.one()) * AElement::u_power(ctx, 2);
    for (int m = 1; m < n; ++m) {
        // u^m = u * u^{m-1}
        G_img.push_back(Gu * G_img[m - 1]);
        X_img.push_back(Xu * AElement::u_power(ctx, m - 1) + Gu * X_img[m - 1]);
    }
    return is_X ? X_img : G_img;
}

AElement apply_on_basis(const std::vector<AElement>& images, const AElement& a) {
    AElement out(a.context());
    for (int m = 0; m < a.dimension(); ++m)
        if (!a.coeff(m).is_zero()) out += a.coeff(m) * images[m];
    return out;
}

}  // namespace

AElement act_G(const AElement& a) {
    return apply_on_basis(dual_images_on_basis(a.context(), false), a);
}

AElement act_X(const AElement& a) {
    return apply_on_basis(dual_images_on_basis(a.context(), true), a);
}

std::vector<std::pair<std::string, CheckResult>> double_relations_check(
    const CycContext& ctx) {
    const int n = ctx.order();
    const CycScalar winv = ctx.omega_pow(-1);
    std::vector<std::pair<std::string, CheckResult>> out;
    for (int m = 0; m < n; ++m) {
        const AElement um = AElement::u_power(ctx, m);
        const auto record = [&](const std::string& name, const AElement& lhs,
                                const AElement& rhs) {
            CheckResult r;
            r.pass = lhs == rhs;
            if (!r.pass)
                r.detail = "on u^" + std::to_string(m) + ": " + lhs.str() +
                           " != " + rhs.str();
            out.emplace_back(name + "/m=" + std::to_string(m), std::move(r));
        };
        record("gG_eq_Gg", act_g(act_G(um)), act_G(act_g(um)));
        record("xG_eq_winv_Gx", act_x(act_G(um)), winv * act_G(act_x(um)));
        record("Xg_eq_winv_gX", act_X(act_g(um)), winv * act_g(act_X(um)));
        record("xX_minus_Xx_eq_G_minus_g",
               act_x(act_X(um)) - act_X(act_x(um)), act_G(um) - act_g(um));
    }
    return out;
}

std::vector<DualizationConvention> all_dualization_conventions() {
    return {DualizationConvention::Plain, DualizationConvention::Antipode,
            DualizationConvention::CopSubstitution,
            DualizationConvention::AntipodeInverse};
}

std::string convention_name(DualizationConvention c) {
    switch (c) {
        case DualizationConvention::Plain:
            return "plain";
        case DualizationConvention::Antipode:
            return "antipode";
        case DualizationConvention::CopSubstitution:
            return "cop_substitution";
        case DualizationConvention::AntipodeInverse:
            return "antipode_inverse";
    }
    return "?";
}

AElement dualized_action(const PairingTable& table, const Coaction& co,
                         DualizationConvention convention, const DualElement& f,
                         const AElement& a) {
    const CycContext& ctx = co.context();
    DualElement eff = f;
    bool invert_leg = false;
    switch (convention) {
        case DualizationConvention::Plain:
            break;
        case DualizationConvention::Antipode:
            eff = f.antipode();
            break;
        case DualizationConvention::CopSubstitution: {
            const DualElement img_x =
                DualElement::gen_x(ctx) * DualElement::monomial(ctx, 0, -1);
            const DualElement img_g = DualElement::monomial(ctx, 0, -1);
            eff = f.substitute_generators_hom(img_x, img_g);
            break;
        }
        case DualizationConvention::AntipodeInverse:
            invert_leg = true;
            break;
    }

    AElement out(ctx);
    const TensorElement ra = co.rho(a);
    for (const auto& [key, c] : ra.terms()) {
        TaftElement leg = TaftElement::monomial(ctx, key[0].xpow, key[0].gpow);
        if (invert_leg) leg = leg.antipode_inverse();
        out += (c * pairing(table, eff, leg)) *
               AElement::u_power(ctx, key[1].xpow);
    }
    return out;
}

std::vector<ConventionReport> dual_action_consistency(const Coaction& co) {
    const CycContext& ctx = co.context();
    PairingTable table(ctx);
    const AElement u = AElement::u_power(ctx, 1);
    const AElement expect_G = ctx.omega_pow(-1) * u;
    AElement expect_X(ctx);
    expect_X += (ctx.omega_pow(-1) - ctx.one()) * AElement::u_power(ctx, 2);

    std::vector<ConventionReport> out;
    for (DualizationConvention c : all_dualization_conventions()) {
        ConventionReport rep;
        rep.convention = c;
        const AElement got_G =
            dualized_action(table, co, c, DualElement::gen_g(ctx), u);
        const AElement got_X =
            dualized_action(table, co, c, DualElement::gen_x(ctx), u);
        rep.matches_G = got_G == expect_G;
        rep.matches_X = got_X == expect_X;
        rep.g_action = got_G.str();
        rep.x_action = got_X.str();
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace taft
