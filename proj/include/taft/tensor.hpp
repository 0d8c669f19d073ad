#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "taft/quantum_plane.hpp"
#include "taft/taft_algebra.hpp"

namespace taft {

enum class Leg : std::uint8_t { H, A };

/// Linear combination of pure tensors of basis monomials across 1 to 3
/// ordered factors, each factor tagged H or A. H slots hold x^b g^a keys;
/// A slots hold u^m as XgMono{m, 0}. Products are componentwise (no
/// braiding twist) and require matching factor signatures.
class TensorElement {
public:
    static constexpr int kMaxArity = 3;
    using Key = std::array<XgMono, kMaxArity>;  // slots past arity stay {0,0}
    using TermMap = std::map<Key, CycScalar>;

    TensorElement(CycContext ctx, std::vector<Leg> legs);

    static TensorElement unit(const CycContext& ctx, std::vector<Leg> legs);
    static TensorElement from_taft(const TaftElement& p);  // arity 1, kind H
    static TensorElement from_a(const AElement& a);        // arity 1, kind A

    const CycContext& context() const noexcept { return ctx_; }
    int arity() const noexcept { return static_cast<int>(legs_.size()); }
    const std::vector<Leg>& legs() const noexcept { return legs_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Key& key, const CycScalar& c);

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const TensorElement& o) { return *this = *this * o; }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const CycScalar& c, TensorElement e);

    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    TensorElement pow(int e) const;

    /// Replaces one slot by the image of a linear map given on basis
    /// monomials; the image's factor signature is spliced in place of the
    /// slot. Throws KindMismatchError when the combined arity exceeds 3.
    TensorElement apply_to_slot(
        int slot, const std::function<TensorElement(const XgMono&)>& f) const;

    std::string str() const;

private:
    CycContext ctx_;
    std::vector<Leg> legs_;
    TermMap terms_;

    void check_same_signature(const TensorElement& o) const;
};

/// Outer tensor product: signatures concatenate (arity must stay <= 3).
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// Delta as a TensorElement in H (x) H, per the q-binomial expansion of
/// coproduct_pairs.
TensorElement coproduct(const TaftElement& p);

}  // namespace taft
