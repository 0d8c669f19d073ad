#pragma once

#include <functional>
#include <span>
#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

/// (m)_w = 1 + w + ... + w^{m-1}; (0)_w = 0.
CycScalar q_integer(const CycContext& ctx, long m);

/// Gaussian binomial (m choose k)_w by the Pascal recurrence
///   C(m,k) = C(m-1,k-1) + w^k * C(m-1,k),  C(m,0) = C(m,m) = 1.
/// Division-free, so it stays defined at roots of unity. Returns 0 when
/// k < 0 or k > m.
CycScalar gaussian_binomial(const CycContext& ctx, long m, long k);

/// ((k+s) choose k)_w as the quotient
///   (1-w^{s+1})...(1-w^{s+k}) / ((1-w)...(1-w^k)).
/// Only defined for 0 <= k <= n-1, where the denominator is nonzero;
/// throws DenominatorVanishesError for k >= n.
CycScalar gaussian_binomial_product_form(const CycContext& ctx, long k, long s);

/// Visits every composition of `total` into `parts` nonnegative parts, in
/// ascending lexicographic order on (i_1, ..., i_parts).
void for_each_composition(long total, int parts,
                          const std::function<void(std::span<const long>)>& visit);

/// Number of compositions of k into `parts` nonnegative parts.
long composition_count(long k, int parts);

/// Sum of w^{sum_{j>=2} i_j*(j-1)} over all compositions (i_1,...,i_{s+1})
/// of k into s+1 nonnegative parts.
CycScalar composition_sum(const CycContext& ctx, long k, long s);

/// Same weighted sum over compositions into an explicit number of parts.
CycScalar composition_sum_parts(const CycContext& ctx, long k, int parts);

}  // namespace taft
