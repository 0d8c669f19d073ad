#include <doctest.h>

#include <vector>

#include "taft/errors.hpp"
#include "taft/qcombinat.hpp"

using namespace taft;

TEST_CASE("q_integer basics") {
    CycContext c5(5);
    CHECK(q_integer(c5, 0).is_zero());
    CHECK(q_integer(c5, 1).is_one());
    CHECK(q_integer(c5, 2) == c5.one() + c5.omega());
    // (n)_w = 0: the full geometric sum of n-th roots.
    for (int n = 2; n <= 10; ++n) CHECK(q_integer(CycContext(n), n).is_zero());
}

TEST_CASE("gaussian binomial base cases and frozen values") {
    CycContext c5(5);
    for (long m = 0; m <= 6; ++m) {
        CHECK(gaussian_binomial(c5, m, 0).is_one());
        CHECK(gaussian_binomial(c5, m, m).is_one());
    }
    CHECK(gaussian_binomial(c5, 2, 1) == c5.one() + c5.omega());
    CHECK(gaussian_binomial(c5, 3, -1).is_zero());
    CHECK(gaussian_binomial(c5, 3, 4).is_zero());

    // n=2: (2 choose 1)_w = 1 + w = 0 at w = -1.
    CHECK(gaussian_binomial(CycContext(2), 2, 1).is_zero());

    // (4 choose 2)_w = (1+w^2)(1+w+w^2), via explicit product oracle.
    for (int n : {3, 5, 7, 8}) {
        CycContext ctx(n);
        CycScalar expected = (ctx.one() + ctx.omega_pow(2)) *
                             (ctx.one() + ctx.omega() + ctx.omega_pow(2));
        CHECK(gaussian_binomial(ctx, 4, 2) == expected);
    }
}

TEST_CASE("both Pascal recurrences and symmetry hold") {
    for (int n : {2, 3, 5, 6, 8}) {
        CycContext ctx(n);
        for (long m = 1; m <= 2 * n - 2; ++m) {
            for (long k = 0; k <= m; ++k) {
                CycScalar c = gaussian_binomial(ctx, m, k);
                CHECK(c == gaussian_binomial(ctx, m - 1, k - 1) +
                               ctx.omega_pow(k) * gaussian_binomial(ctx, m - 1, k));
                CHECK(c == ctx.omega_pow(m - k) *
                                   gaussian_binomial(ctx, m - 1, k - 1) +
                               gaussian_binomial(ctx, m - 1, k));
                CHECK(c == gaussian_binomial(ctx, m, m - k));
            }
        }
    }
}

TEST_CASE("product form agrees with the recurrence where defined") {
    for (int n : {2, 3, 4, 5, 6, 7}) {
        CycContext ctx(n);
        for (long k = 0; k < n; ++k)
            for (long s = 0; s <= n; ++s)
                CHECK(gaussian_binomial_product_form(ctx, k, s) ==
                      gaussian_binomial(ctx, k + s, k));
        CHECK_THROWS_AS(gaussian_binomial_product_form(ctx, n, 1),
                        DenominatorVanishesError);
    }
    // k=0 empty product; and the vanishing numerator case 1 - w^n.
    CycContext c2(2);
    CHECK(gaussian_binomial_product_form(c2, 0, 3).is_one());
    CHECK(gaussian_binomial_product_form(c2, 1, 1).is_zero());
    CycContext c3(3);
    CHECK(gaussian_binomial_product_form(c3, 1, 1) == c3.one() + c3.omega());
}

TEST_CASE("composition enumeration order and count") {
    std::vector<std::vector<long>> seen;
    for_each_composition(2, 2, [&](std::span<const long> c) {
        seen.emplace_back(c.begin(), c.end());
    });
    CHECK(seen == std::vector<std::vector<long>>{{0, 2}, {1, 1}, {2, 0}});

    long count = 0;
    for_each_composition(5, 4, [&](std::span<const long>) { ++count; });
    CHECK(count == composition_count(5, 4));
    CHECK(composition_count(5, 4) == 56);  // binomial(8, 3)
    CHECK(composition_count(9, 10) == 48620);  // binomial(18, 9)
}

TEST_CASE("composition_sum frozen examples") {
    CycContext c3(3);
    CHECK(composition_sum(c3, 0, 2).is_one());
    CHECK(composition_sum(c3, 2, 0).is_one());
    // k=1, s=1: compositions (1,0), (0,1) weigh 1 and w.
    CHECK(composition_sum(c3, 1, 1) == c3.one() + c3.omega());
    // n=2: the same sum collapses to 0 at w = -1.
    CHECK(composition_sum(CycContext(2), 1, 1).is_zero());
}

TEST_CASE("composition_sum matches gaussian binomial / vanishes") {
    for (int n = 2; n <= 7; ++n) {
        CycContext ctx(n);
        for (long k = 0; k < n; ++k) {
            for (long s = 0; s < n; ++s) {
                CycScalar lhs = composition_sum(ctx, k, s);
                if (k + s < n)
                    CHECK(lhs == gaussian_binomial(ctx, k + s, k));
                else
                    CHECK(lhs.is_zero());
            }
        }
    }
}
