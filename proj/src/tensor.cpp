#include "taft/tensor.hpp"

#include <sstream>

#include "taft/errors.hpp"

namespace taft {

namespace {

// Componentwise slot product. Returns false when the slot product vanishes;
// otherwise writes the normal-form key and multiplies the twist into coeff.
bool multiply_slot(const CycContext& ctx, Leg leg, const XgMono& l,
                   const XgMono& r, XgMono& out, CycScalar& coeff) {
    const int n = ctx.order();
    if (leg == Leg::H) {
        auto prod = mono_product(ctx, l, r);
        if (!prod) return false;
        out = prod->first;
        coeff *= prod->second;
        return true;
    }
    // A slot: u^p u^q with u^n = w.
    int m = l.xpow + r.xpow;
    if (m >= n) {
        m -= n;
        coeff *= ctx.omega();
    }
    out = XgMono{m, 0};
    return true;
}

}  // namespace

TensorElement::TensorElement(CycContext ctx, std::vector<Leg> legs)
    : ctx_(std::move(ctx)), legs_(std::move(legs)) {
    if (legs_.empty() || legs_.size() > kMaxArity)
        throw KindMismatchError("tensor arity must be between 1 and 3");
}

TensorElement TensorElement::unit(const CycContext& ctx, std::vector<Leg> legs) {
    TensorElement e(ctx, std::move(legs));
    e.terms_.emplace(Key{}, ctx.one());
    return e;
}

TensorElement TensorElement::from_taft(const TaftElement& p) {
    TensorElement e(p.context(), {Leg::H});
    for (const auto& [m, c] : p.terms()) e.terms_.emplace(Key{m}, c);
    return e;
}

TensorElement TensorElement::from_a(const AElement& a) {
    TensorElement e(a.context(), {Leg::A});
    for (int m = 0; m < a.dimension(); ++m)
        if (!a.coeff(m).is_zero())
            e.terms_.emplace(Key{XgMono{m, 0}}, a.coeff(m));
    return e;
}

void TensorElement::add_term(const Key& key, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::check_same_signature(const TensorElement& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw ContextMismatchError("tensors belong to different contexts");
    if (legs_ != o.legs_)
        throw KindMismatchError("tensor factor signatures differ");
}

TensorElement TensorElement::operator-() const {
    TensorElement e(ctx_, legs_);
    for (const auto& [k, c] : terms_) e.terms_.emplace(k, -c);
    return e;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    check_same_signature(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    check_same_signature(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.check_same_signature(b);
    TensorElement out(a.ctx_, a.legs_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            TensorElement::Key key{};
            CycScalar coeff = ca * cb;
            bool alive = true;
            for (int s = 0; s < a.arity() && alive; ++s)
                alive = multiply_slot(a.ctx_, a.legs_[s], ka[s], kb[s], key[s],
                                      coeff);
            if (alive) out.add_term(key, coeff);
        }
    }
    return out;
}

TensorElement operator*(const CycScalar& c, TensorElement e) {
    if (c.is_zero()) return TensorElement(e.ctx_, e.legs_);
    for (auto& [k, coeff] : e.terms_) coeff *= c;
    return e;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw ContextMismatchError("tensors belong to different contexts");
    return legs_ == o.legs_ && terms_ == o.terms_;
}

TensorElement TensorElement::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative tensor power");
    TensorElement acc = unit(ctx_, legs_);
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

TensorElement TensorElement::apply_to_slot(
    int slot, const std::function<TensorElement(const XgMono&)>& f) const {
    if (slot < 0 || slot >= arity())
        throw std::invalid_argument("slot out of range");

    std::map<XgMono, TensorElement> image_cache;
    TensorElement* out = nullptr;
    TensorElement result(ctx_, legs_);  // placeholder signature, fixed below
    bool signature_set = false;

    for (const auto& [key, c] : terms_) {
        auto it = image_cache.find(key[slot]);
        if (it == image_cache.end())
            it = image_cache.emplace(key[slot], f(key[slot])).first;
        const TensorElement& image = it->second;

        if (!signature_set) {
            std::vector<Leg> legs;
            legs.insert(legs.end(), legs_.begin(), legs_.begin() + slot);
            legs.insert(legs.end(), image.legs_.begin(), image.legs_.end());
            legs.insert(legs.end(), legs_.begin() + slot + 1, legs_.end());
            if (legs.size() > kMaxArity)
                throw KindMismatchError("slot expansion exceeds arity 3");
            result = TensorElement(ctx_, std::move(legs));
            signature_set = true;
        }

        for (const auto& [ikey, ic] : image.terms_) {
            Key spliced{};
            int pos = 0;
            for (int s = 0; s < slot; ++s) spliced[pos++] = key[s];
            for (int s = 0; s < image.arity(); ++s) spliced[pos++] = ikey[s];
            for (int s = slot + 1; s < arity(); ++s) spliced[pos++] = key[s];
            result.add_term(spliced, c * ic);
        }
    }

    if (!signature_set) {
        // Zero element: the signature still changes shape; infer it from f
        // applied to a unit monomial.
        TensorElement image = f(XgMono{0, 0});
        std::vector<Leg> legs;
        legs.insert(legs.end(), legs_.begin(), legs_.begin() + slot);
        legs.insert(legs.end(), image.legs_.begin(), image.legs_.end());
        legs.insert(legs.end(), legs_.begin() + slot + 1, legs_.end());
        if (legs.size() > kMaxArity)
            throw KindMismatchError("slot expansion exceeds arity 3");
        return TensorElement(ctx_, std::move(legs));
    }
    return result;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*";
        for (int s = 0; s < arity(); ++s) {
            if (s > 0) out << "(x)";
            const XgMono& m = key[s];
            if (legs_[s] == Leg::H) {
                if (m.xpow == 0 && m.gpow == 0) {
                    out << "1";
                } else {
                    if (m.xpow == 1)
                        out << "x";
                    else if (m.xpow > 1)
                        out << "x^" << m.xpow;
                    if (m.xpow > 0 && m.gpow > 0) out << " ";
                    if (m.gpow == 1)
                        out << "g";
                    else if (m.gpow > 1)
                        out << "g^" << m.gpow;
                }
            } else {
                if (m.xpow == 0)
                    out << "1";
                else if (m.xpow == 1)
                    out << "u";
                else
                    out << "u^" << m.xpow;
            }
        }
    }
    return out.str();
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    if (!a.context().same_field(b.context()))
        throw ContextMismatchError("tensors belong to different contexts");
    std::vector<Leg> legs = a.legs();
    legs.insert(legs.end(), b.legs().begin(), b.legs().end());
    if (legs.size() > TensorElement::kMaxArity)
        throw KindMismatchError("outer product exceeds arity 3");
    TensorElement out(a.context(), std::move(legs));
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            TensorElement::Key key{};
            int pos = 0;
            for (int s = 0; s < a.arity(); ++s) key[pos++] = ka[s];
            for (int s = 0; s < b.arity(); ++s) key[pos++] = kb[s];
            out.add_term(key, ca * cb);
        }
    }
    return out;
}

TensorElement coproduct(const TaftElement& p) {
    TensorElement out(p.context(), {Leg::H, Leg::H});
    for (const auto& [left, right, c] : coproduct_pairs(p))
        out.add_term(TensorElement::Key{left, right}, c);
    return out;
}

}  // namespace taft
