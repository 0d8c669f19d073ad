#include "taft/qcombinat.hpp"

#include <stdexcept>

#include "taft/errors.hpp"

namespace taft {

CycScalar q_integer(const CycContext& ctx, long m) {
    if (m < 0) throw std::invalid_argument("q_integer needs m >= 0");
    CycScalar sum = ctx.zero();
    for (long j = 0; j < m; ++j) sum += ctx.omega_pow(j);
    return sum;
}

CycScalar gaussian_binomial(const CycContext& ctx, long m, long k) {
    if (k < 0 || k > m) return ctx.zero();
    // One Pascal row at a time; row[j] = C(i, j).
    std::vector<CycScalar> row{ctx.one()};
    for (long i = 1; i <= m; ++i) {
        std::vector<CycScalar> next;
        next.reserve(i + 1);
        next.push_back(ctx.one());
        for (long j = 1; j < i; ++j)
            next.push_back(row[j - 1] + ctx.omega_pow(j) * row[j]);
        next.push_back(ctx.one());
        row = std::move(next);
    }
    return row[k];
}

CycScalar gaussian_binomial_product_form(const CycContext& ctx, long k, long s) {
    if (k < 0 || s < 0)
        throw std::invalid_argument("product form needs k, s >= 0");
    if (k >= ctx.order())
        throw DenominatorVanishesError(
            "product form denominator vanishes for k >= n");
    const CycScalar one = ctx.one();
    CycScalar num = one;
    CycScalar den = one;
    for (long j = 1; j <= k; ++j) {
        num *= one - ctx.omega_pow(s + j);
        den *= one - ctx.omega_pow(j);
    }
    return num * den.inverse();
}

namespace {

void compositions_rec(long remaining, int slot, std::vector<long>& parts,
                      const std::function<void(std::span<const long>)>& visit) {
    const int total_slots = static_cast<int>(parts.size());
    if (slot == total_slots - 1) {
        parts[slot] = remaining;
        visit(std::span<const long>(parts.data(), parts.size()));
        return;
    }
    for (long v = 0; v <= remaining; ++v) {
        parts[slot] = v;
        compositions_rec(remaining - v, slot + 1, parts, visit);
    }
}

}  // namespace

void for_each_composition(long total, int parts,
                          const std::function<void(std::span<const long>)>& visit) {
    if (total < 0 || parts < 1)
        throw std::invalid_argument("compositions need total >= 0 and parts >= 1");
    std::vector<long> buf(parts, 0);
    compositions_rec(total, 0, buf, visit);
}

long composition_count(long k, int parts) {
    // binomial(k + parts - 1, parts - 1)
    long result = 1;
    for (int i = 1; i <= parts - 1; ++i)
        result = result * (k + i) / i;
    return result;
}

CycScalar composition_sum_parts(const CycContext& ctx, long k, int parts) {
    CycScalar sum = ctx.zero();
    for_each_composition(k, parts, [&](std::span<const long> c) {
        long long exponent = 0;
        for (std::size_t j = 1; j < c.size(); ++j)
            exponent += c[j] * static_cast<long long>(j);
        sum += ctx.omega_pow(exponent);
    });
    return sum;
}

CycScalar composition_sum(const CycContext& ctx, long k, long s) {
    if (k < 0 || s < 0)
        throw std::invalid_argument("composition_sum needs k, s >= 0");
    return composition_sum_parts(ctx, k, static_cast<int>(s) + 1);
}

}  // namespace taft
