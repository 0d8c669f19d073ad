#include <doctest.h>

#include <random>

#include "taft/comodule.hpp"
#include "taft/qcombinat.hpp"

using namespace taft;

namespace {

AElement random_a(const CycContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    AElement a(ctx);
    for (int m = 0; m < ctx.order(); ++m)
        a.set_coeff(m, ctx.from_integer(coeff(rng)));
    return a;
}

}  // namespace

TEST_CASE("rho(u) has the expected term structure") {
    for (int n : {2, 3, 5, 8}) {
        CycContext ctx(n);
        Coaction co(ctx);
        const auto& terms = co.rho_u().terms();
        CHECK(static_cast<int>(terms.size()) == n);
        for (int i = 0; i < n; ++i) {
            int gexp = (n - ((i + 1) % n)) % n;
            auto it = terms.find(
                TensorElement::Key{XgMono{i, gexp}, XgMono{(i + 1) % n, 0}});
            REQUIRE(it != terms.end());
            CycScalar expected = a_coefficient(ctx, i);
            if (i == n - 1) expected *= ctx.omega();  // u^n = w wrap
            CHECK(it->second == expected);
        }
    }
}

TEST_CASE("rho(1) = 1 (x) 1 and rho(u)^n = w (1 (x) 1)") {
    for (int n = 2; n <= 10; ++n) {
        CycContext ctx(n);
        Coaction co(ctx);
        CHECK(co.rho(AElement::one(ctx)) ==
              TensorElement::unit(ctx, {Leg::H, Leg::A}));
        CHECK(co.rho_power(n) ==
              ctx.omega() * TensorElement::unit(ctx, {Leg::H, Leg::A}));
    }
}

TEST_CASE("closed form of rho(u)^s equals the direct power") {
    for (int n = 2; n <= 8; ++n) {
        CycContext ctx(n);
        Coaction co(ctx);
        for (int s = 1; s <= n; ++s)
            CHECK(co.rho_power_closed(s) == co.rho_power(s));
        CHECK_THROWS_AS(co.rho_power_closed(0), std::invalid_argument);
        CHECK_THROWS_AS(co.rho_power_closed(n + 1), std::invalid_argument);
    }
    // n=2, s=2: direct squaring gives w (1 (x) 1)
    CycContext c2(2);
    Coaction co2(c2);
    CHECK(co2.rho_power_closed(2) ==
          c2.omega() * TensorElement::unit(c2, {Leg::H, Leg::A}));
}

TEST_CASE("comodule axiom holds on u and on every basis power") {
    for (int n = 2; n <= 8; ++n) {
        CycContext ctx(n);
        Coaction co(ctx);
        CHECK(comodule_axiom_on(co, 1).pass);
        for (int m = 0; m < n; ++m) CHECK(comodule_axiom_on(co, m).pass);
    }
}

TEST_CASE("counit axiom (eps (x) id) rho = id") {
    for (int n = 2; n <= 8; ++n) {
        CycContext ctx(n);
        Coaction co(ctx);
        for (int m = 0; m < n; ++m) CHECK(counit_axiom_on(co, m).pass);
    }
}

TEST_CASE("rho is an algebra map on random pairs") {
    std::mt19937 rng(17);
    for (int n : {2, 3, 5, 6}) {
        CycContext ctx(n);
        Coaction co(ctx);
        for (int round = 0; round < 8; ++round) {
            AElement a = random_a(ctx, rng);
            AElement b = random_a(ctx, rng);
            CHECK(co.rho(a * b) == co.rho(a) * co.rho(b));
        }
    }
}

TEST_CASE("main identity grid: lhs vs rhs branches") {
    for (int n = 2; n <= 7; ++n) {
        CycContext ctx(n);
        for (long k = 0; k < n; ++k)
            for (long s = 0; s < n; ++s)
                CHECK(main_identity_lhs(ctx, k, s) ==
                      main_identity_rhs(ctx, k, s));
    }
    // frozen: (k,s)=(1,1) at n=2 -> both zero; at n=3 -> both 1+w
    CycContext c2(2), c3(3);
    CHECK(main_identity_lhs(c2, 1, 1).is_zero());
    CHECK(main_identity_rhs(c2, 1, 1).is_zero());
    CHECK(main_identity_lhs(c3, 1, 1) == c3.one() + c3.omega());
    CHECK(main_identity_rhs(c3, 1, 1) == c3.one() + c3.omega());
}

TEST_CASE("equivalence witness: axiom and identity grid pass jointly") {
    for (int n = 2; n <= 6; ++n) {
        CycContext ctx(n);
        Coaction co(ctx);
        bool axiom = true;
        for (int m = 0; m < n; ++m) axiom = axiom && comodule_axiom_on(co, m).pass;
        bool grid = true;
        for (long k = 0; k < n; ++k)
            for (long s = 0; s < n; ++s)
                grid = grid &&
                       main_identity_lhs(ctx, k, s) == main_identity_rhs(ctx, k, s);
        CHECK(axiom == grid);
        CHECK(axiom);
    }
}

TEST_CASE("negative control: scaling a_1 by w breaks the axiom for n >= 3") {
    for (int n = 3; n <= 6; ++n) {
        CycContext ctx(n);
        Coaction bad = Coaction::with_scaled_term(ctx, 1, ctx.omega());
        bool any_fail = false;
        for (int m = 0; m < n && !any_fail; ++m)
            any_fail = !comodule_axiom_on(bad, m).pass;
        CHECK(any_fail);
        CHECK_FALSE(comodule_axiom_on(bad, 1).pass);
    }
}

TEST_CASE("root independence of the comodule checks") {
    for (int n : {5, 6, 8}) {
        for (int t : primitive_root_exponents(n)) {
            CycContext ctx(n, t);
            Coaction co(ctx);
            for (int m = 0; m < n; ++m) {
                CHECK(comodule_axiom_on(co, m).pass);
                CHECK(counit_axiom_on(co, m).pass);
            }
        }
    }
}
