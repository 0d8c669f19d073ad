#include <doctest.h>

#include <random>

#include "taft/cyclotomic.hpp"
#include "taft/errors.hpp"
#include "taft/polynomial.hpp"

using namespace taft;

namespace {

// Random scalar with small rational coefficients, for algebraic-law checks.
CycScalar random_scalar(const CycContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c;
    for (int i = 0; i < ctx.degree(); ++i)
        c.push_back(make_rational(num(rng), den(rng)));
    return CycScalar(ctx, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small orders") {
    // n=2 and n=4 are pinned directly; n=6 against a division oracle.
    CHECK(cyclotomic_polynomial(2) == poly::Poly{Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(4) ==
          poly::Poly{Rational(1), Rational(0), Rational(1)});

    // Oracle for n=6: divide x^6 - 1 by the explicit product
    // (x-1)(x+1)(x^2+x+1) and compare.
    poly::Poly x6m1(7, Rational(0));
    x6m1[0] = -1;
    x6m1[6] = 1;
    poly::Poly prod = poly::mul(
        poly::mul(poly::Poly{Rational(-1), Rational(1)},
                  poly::Poly{Rational(1), Rational(1)}),
        poly::Poly{Rational(1), Rational(1), Rational(1)});
    auto [quot, rem] = poly::divmod(x6m1, prod);
    CHECK(poly::is_zero(rem));
    CHECK(cyclotomic_polynomial(6) == quot);
    // which is x^2 - x + 1
    CHECK(quot == poly::Poly{Rational(1), Rational(-1), Rational(1)});

    CHECK_THROWS_AS(cyclotomic_polynomial(1), InvalidOrderError);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidOrderError);
}

TEST_CASE("context invariants: degree, monic, divides x^n - 1") {
    for (int n = 2; n <= 12; ++n) {
        CycContext ctx(n);
        const auto& phi = ctx.modulus();
        CHECK(poly::degree(phi) == euler_phi(n));
        CHECK(phi.back() == 1);
        poly::Poly xnm1(n + 1, Rational(0));
        xnm1[0] = -1;
        xnm1[n] = 1;
        CHECK(poly::is_zero(poly::divmod(xnm1, phi).second));
    }
}

TEST_CASE("primitivity: w^n = 1 and 1 - w^k != 0 for 0 < k < n") {
    for (int n = 2; n <= 12; ++n) {
        CycContext ctx(n);
        CHECK(ctx.omega_pow(n).is_one());
        CHECK(ctx.omega_pow(0).is_one());
        for (int k = 1; k < n; ++k) {
            CHECK_FALSE((ctx.one() - ctx.omega_pow(k)).is_zero());
            CHECK_FALSE(ctx.omega_pow(k).is_one());
        }
        CHECK((ctx.one() - ctx.omega_pow(n)).is_zero());
    }
}

TEST_CASE("omega_pow reduces exponents mod n, including negatives") {
    CycContext ctx(5);
    CHECK(ctx.omega_pow(7) == ctx.omega_pow(2));
    CHECK(ctx.omega_pow(-1) == ctx.omega_pow(4));
    CHECK(ctx.omega_pow(-12) == ctx.omega_pow(3));
    CHECK(ctx.omega_pow(1) * ctx.omega_pow(-1) == ctx.one());
}

TEST_CASE("small-order identities forced by the modulus") {
    CycContext c2(2);
    CHECK((c2.one() + c2.omega()).is_zero());  // Phi_2 = x + 1
    CycContext c4(4);
    CHECK((c4.omega_pow(2) + c4.one()).is_zero());  // Phi_4 = x^2 + 1
}

TEST_CASE("scalar inverse against extended-gcd oracle values") {
    CHECK(CycContext(3).one().inverse().is_one());

    // n=3: (1-w)^{-1} = (2+w)/3, since (1-w)(2+w) = 3 once w^2 = -1-w.
    CycContext c3(3);
    CycScalar a = c3.one() - c3.omega();
    CycScalar expected(c3, {make_rational(2, 3), make_rational(1, 3)});
    CHECK(a.inverse() == expected);
    CHECK(a * a.inverse() == c3.one());
    CHECK((c3.one() - c3.omega()) * (c3.from_integer(2) + c3.omega()) ==
          c3.from_integer(3));

    // n=2: w = -1, so (1-w)^{-1} = 1/2.
    CycContext c2(2);
    CycScalar b = c2.one() - c2.omega();
    CHECK(b.inverse() == c2.from_rational(make_rational(1, 2)));

    CHECK_THROWS_AS(c3.zero().inverse(), DivisionByZeroError);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20260810);
    for (int n : {2, 3, 4, 5, 6, 8, 12}) {
        CycContext ctx(n);
        for (int round = 0; round < 40; ++round) {
            CycScalar a = random_scalar(ctx, rng);
            CycScalar b = random_scalar(ctx, rng);
            CycScalar c = random_scalar(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == ctx.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == ctx.one());
        }
    }
}

TEST_CASE("representations stay reduced") {
    // Products never leak representatives of degree >= phi(n); the
    // coefficient vector length is pinned to the field degree.
    CycContext ctx(12);
    CycScalar a = ctx.omega_pow(7) * ctx.omega_pow(11) + ctx.omega_pow(5);
    CHECK(static_cast<int>(a.coefficients().size()) == ctx.degree());
    CycScalar b = a * a * a;
    CHECK(static_cast<int>(b.coefficients().size()) == ctx.degree());
}

TEST_CASE("context mismatch is rejected") {
    CycContext c2(2), c3(3);
    CHECK_THROWS_AS(c2.one() + c3.one(), ContextMismatchError);
    CHECK_THROWS_AS((void)(c2.one() == c3.one()), ContextMismatchError);
    // Same order, different working root: still a different context.
    CycContext c5a(5, 1), c5b(5, 2);
    CHECK_THROWS_AS(c5a.one() * c5b.one(), ContextMismatchError);
}

TEST_CASE("root exponent selects another primitive root") {
    CycContext ctx(5, 2);
    CHECK(ctx.omega_pow(5).is_one());
    for (int k = 1; k < 5; ++k) CHECK_FALSE(ctx.omega_pow(k).is_one());
    // omega = zeta^2, so omega^3 = zeta^6 = zeta.
    CycContext canonical(5, 1);
    CHECK(ctx.omega_pow(3).coefficients() ==
          canonical.omega_pow(1).coefficients());

    CHECK_THROWS_AS(CycContext(6, 2), InvalidOrderError);
    CHECK_THROWS_AS(CycContext(1), InvalidOrderError);
}

TEST_CASE("scalar rendering is stable and sorted by power") {
    CycContext c3(3);
    CHECK(c3.zero().str() == "0");
    CHECK(c3.one().str() == "1");
    CHECK((c3.one() + c3.omega()).str() == "1 + w");
    CHECK((-c3.omega()).str() == "-w");
    CHECK((c3.one() - c3.omega()).inverse().str() == "2/3 + 1/3*w");
    CycContext c5(5);
    CHECK((c5.omega_pow(3) - c5.one()).str() == "-1 + w^3");
}
