#pragma once

#include <map>
#include <string>
#include <vector>

#include "taft/comodule.hpp"
#include "taft/quantum_plane.hpp"
#include "taft/taft_algebra.hpp"

namespace taft {

/// Memoized Hopf pairing <X^b G^a, x^d g^c>. Base cases
///   <G,g> = w^{-1}, <G,x> = 0, <X,g> = 0, <X,x> = 1,
///   <1,h> = eps(h), <F,1> = eps(F);
/// general monomials are peeled one generator at a time through
///   <F F', h> = sum <F, h_1><F', h_2>  and  <F, h k> = sum <F_1, h><F_2, k>.
class PairingTable {
public:
    explicit PairingTable(CycContext ctx);

    const CycContext& context() const noexcept { return ctx_; }
    CycScalar mono(const XgMono& dual, const XgMono& primal) const;

private:
    CycContext ctx_;
    mutable std::map<std::array<int, 4>, CycScalar> memo_;

    CycScalar single_x(const XgMono& primal) const;  // <X, x^d g^c>
    CycScalar single_g(const XgMono& primal) const;  // <G, x^d g^c>
};

CycScalar pairing(const PairingTable& table, const DualElement& f,
                  const TaftElement& h);
CycScalar pairing(const DualElement& f, const TaftElement& h);

/// <F, h k> computed by splitting F through its coproduct — the route that
/// must annihilate the H-side relation x g - w g x.
CycScalar pairing_via_primal_product(const PairingTable& table,
                                     const DualElement& f,
                                     const TaftElement& h,
                                     const TaftElement& k);

/// <F F', h> computed by splitting h — the route that must annihilate the
/// dual-side relation X G - w G X.
CycScalar pairing_via_dual_product(const PairingTable& table,
                                   const DualElement& f,
                                   const DualElement& fp,
                                   const TaftElement& h);

/// Rank of the n^2 x n^2 Gram matrix <X^b G^a, x^d g^c> by exact Gaussian
/// elimination over Q(w).
int gram_rank(const CycContext& ctx);

/// Determinant of the grouplike submatrix <G^a, g^c> = w^{-ac}.
CycScalar grouplike_gram_determinant(const CycContext& ctx);

/// Actions of the dual generators on A: G.u = w^{-1} u extended
/// multiplicatively, X.u = (w^{-1}-1) u^2 extended by the twisted product
/// rule X.(ab) = (X.a)b + (G.a)(X.b).
AElement act_G(const AElement& a);
AElement act_X(const AElement& a);

/// The four double-generator relations, verified as operator identities on
/// every basis element u^m:
///   gG = Gg,  xG = w^{-1}Gx,  Xg = w^{-1}gX,  xX - Xx = G - g.
std::vector<std::pair<std::string, CheckResult>> double_relations_check(
    const CycContext& ctx);

/// Candidate ways of turning the coaction into an H*-action.
enum class DualizationConvention {
    Plain,            // f.a = <f, a_{-1}> a_0
    Antipode,         // f.a = <S(f), a_{-1}> a_0
    CopSubstitution,  // f -> f|_{X -> X G^{-1}, G -> G^{-1}}, then Plain
    AntipodeInverse,  // f.a = <f, S^{-1}(a_{-1})> a_0
};

std::vector<DualizationConvention> all_dualization_conventions();
std::string convention_name(DualizationConvention c);

AElement dualized_action(const PairingTable& table, const Coaction& co,
                         DualizationConvention convention,
                         const DualElement& f, const AElement& a);

struct ConventionReport {
    DualizationConvention convention;
    bool matches_G = false;  // reproduces G.u = w^{-1} u
    bool matches_X = false;  // reproduces X.u = (w^{-1}-1) u^2
    std::string g_action;
    std::string x_action;
};

/// Which documented conventions reproduce the dual generator actions.
std::vector<ConventionReport> dual_action_consistency(const Coaction& co);

}  // namespace taft
