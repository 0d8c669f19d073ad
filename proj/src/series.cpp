#include "taft/series.hpp"

#include <stdexcept>

#include "taft/errors.hpp"

namespace taft {

TruncatedSeries::TruncatedSeries(CycContext ctx, int order)
    : ctx_(std::move(ctx)), coeffs_(order + 1, ctx_.zero()) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(const CycContext& ctx, int order,
                                          const CycScalar& value) {
    TruncatedSeries s(ctx, order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::one(const CycContext& ctx, int order) {
    return constant(ctx, order, ctx.one());
}

TruncatedSeries TruncatedSeries::geometric(const CycContext& ctx, int order,
                                           const CycScalar& ratio) {
    TruncatedSeries s(ctx, order);
    CycScalar cur = ctx.one();
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[k] = cur;
        if (k < order) cur *= ratio;
    }
    return s;
}

const CycScalar& TruncatedSeries::coeff(int k) const {
    return coeffs_.at(k);
}

void TruncatedSeries::set_coeff(int k, CycScalar value) {
    coeffs_.at(k) = std::move(value);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw ContextMismatchError("series belong to different contexts");
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("series truncation orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    check_compatible(o);
    std::vector<CycScalar> out(coeffs_.size(), ctx_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    check_compatible(o);
    return coeffs_ == o.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0].is_zero())
        throw DivisionByZeroError("series with zero constant term has no inverse");
    const CycScalar c0_inv = coeffs_[0].inverse();
    TruncatedSeries h(ctx_, order());
    h.coeffs_[0] = c0_inv;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        CycScalar acc = ctx_.zero();
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * h.coeffs_[k - j];
        h.coeffs_[k] = -(c0_inv * acc);
    }
    return h;
}

std::vector<CycScalar> beta_coefficients(const CycContext& ctx, int s, int order) {
    if (s < 0 || order < 0)
        throw std::invalid_argument("beta_coefficients needs s, K >= 0");
    TruncatedSeries prod = TruncatedSeries::one(ctx, order);
    for (int l = 1; l <= s + 1; ++l)
        prod *= TruncatedSeries::geometric(ctx, order, ctx.omega_pow(l - 1));
    std::vector<CycScalar> out;
    out.reserve(order + 1);
    for (int k = 0; k <= order; ++k) out.push_back(prod.coeff(k));
    return out;
}

std::vector<CycScalar> hw349_coefficients(const CycContext& ctx, int s, int order) {
    if (s < 0 || order < 0)
        throw std::invalid_argument("hw349_coefficients needs s, K >= 0");
    if (order >= ctx.order())
        throw DenominatorVanishesError(
            "coefficient denominator vanishes for K >= n");
    const CycScalar one = ctx.one();
    std::vector<CycScalar> out;
    out.reserve(order + 1);
    CycScalar cur = one;
    out.push_back(cur);
    for (int k = 1; k <= order; ++k) {
        cur *= (one - ctx.omega_pow(s + k)) * (one - ctx.omega_pow(k)).inverse();
        out.push_back(cur);
    }
    return out;
}

}  // namespace taft
