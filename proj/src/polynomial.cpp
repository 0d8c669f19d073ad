#include "taft/polynomial.hpp"

#include <cstddef>

#include "taft/errors.hpp"

namespace taft::poly {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
    return static_cast<int>(p.size()) - 1;
}

bool is_zero(const Poly& p) {
    return p.empty();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
    Poly rem = a;
    trim(rem);
    const int db = degree(b);
    if (degree(rem) < db) return {{}, rem};
    Poly quot(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (degree(rem) >= db) {
        const int shift = degree(rem) - db;
        Rational c = rem.back() / lead;
        quot[shift] = c;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
        trim(rem);
        if (rem.empty()) break;
    }
    trim(quot);
    return {quot, rem};
}

Poly mod(const Poly& a, const Poly& b) {
    return divmod(a, b).second;
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    // Iterative extended Euclid; invariants r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    Poly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    Poly s0{Rational(1)}, s1{};
    Poly t0{}, t1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        Poly t = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rational inv_lead = 1 / r0.back();
        r0 = scale(r0, inv_lead);
        s0 = scale(s0, inv_lead);
        t0 = scale(t0, inv_lead);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

}  // namespace taft::poly
