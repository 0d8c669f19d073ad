#pragma once

#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

/// Power series in z over Q(w), truncated exactly at a fixed degree K.
/// Coefficient k of a product depends only on coefficients of index <= k,
/// so truncation commutes with the ring operations.
class TruncatedSeries {
public:
    TruncatedSeries(CycContext ctx, int order);  // the zero series

    static TruncatedSeries constant(const CycContext& ctx, int order,
                                    const CycScalar& value);
    static TruncatedSeries one(const CycContext& ctx, int order);
    /// 1 + r z + r^2 z^2 + ... = 1/(1 - r z), truncated.
    static TruncatedSeries geometric(const CycContext& ctx, int order,
                                     const CycScalar& ratio);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const CycContext& context() const noexcept { return ctx_; }
    const CycScalar& coeff(int k) const;
    void set_coeff(int k, CycScalar value);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    bool operator==(const TruncatedSeries& o) const;

    /// Truncated inverse h with (*this) * h == 1 up to the order. Throws
    /// DivisionByZeroError when the constant term is zero.
    TruncatedSeries inverse() const;

private:
    CycContext ctx_;
    std::vector<CycScalar> coeffs_;

    void check_compatible(const TruncatedSeries& o) const;
};

/// Coefficients beta_0..beta_K of 1/((1-z)(1-zw)...(1-zw^s)), obtained by
/// multiplying the truncated geometric series of the s+1 factors.
std::vector<CycScalar> beta_coefficients(const CycContext& ctx, int s, int order);

/// The explicit coefficients prod_{j=1}^{k} (1-w^{s+j})/(1-w^j), k = 0..K.
/// Throws DenominatorVanishesError when K >= n.
std::vector<CycScalar> hw349_coefficients(const CycContext& ctx, int s, int order);

}  // namespace taft
