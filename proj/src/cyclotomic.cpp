#include "taft/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "taft/errors.hpp"

namespace taft {

int euler_phi(int n) {
    int count = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

std::vector<int> primitive_root_exponents(int n) {
    std::vector<int> out;
    for (int t = 1; t < n; ++t)
        if (std::gcd(t, n) == 1) out.push_back(t);
    if (n == 1) out.push_back(1);
    return out;
}

namespace {

poly::Poly x_pow_minus_one(int n) {
    poly::Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Phi_m for m >= 1. Phi_1 = x - 1; higher orders divide x^m - 1 by the
// product of Phi_d over proper divisors d. Cache is filled bottom-up so
// every divisor is present before it is needed.
poly::Poly cyclotomic_rec(int n) {
    static std::map<int, poly::Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        if (m == 1) {
            cache.emplace(1, poly::Poly{Rational(-1), Rational(1)});
            continue;
        }
        poly::Poly divisor{Rational(1)};
        for (int d = 1; d < m; ++d)
            if (m % d == 0) divisor = poly::mul(divisor, cache.at(d));
        auto [q, r] = poly::divmod(x_pow_minus_one(m), divisor);
        if (!poly::is_zero(r))
            throw std::logic_error("cyclotomic division left a remainder");
        cache.emplace(m, std::move(q));
    }
    return cache.at(n);
}

}  // namespace

poly::Poly cyclotomic_polynomial(int n) {
    if (n < 2) throw InvalidOrderError("cyclotomic order must be >= 2");
    return cyclotomic_rec(n);
}

CycContext::CycContext(int order, int root_exponent) {
    if (order < 2) throw InvalidOrderError("root order must be >= 2");
    int t = root_exponent % order;
    if (t < 0) t += order;
    if (t == 0 || std::gcd(t, order) != 1)
        throw InvalidOrderError("root exponent must be coprime to the order");

    auto data = std::make_shared<Data>();
    data->n = order;
    data->t = t;
    data->phi = cyclotomic_polynomial(order);
    const int deg = poly::degree(data->phi);

    // zeta^j mod Phi_n for j = 0..n-1, each padded to length deg.
    poly::Poly cur{Rational(1)};
    for (int j = 0; j < order; ++j) {
        std::vector<Rational> padded(deg, Rational(0));
        for (std::size_t i = 0; i < cur.size(); ++i) padded[i] = cur[i];
        data->zeta_pow.push_back(std::move(padded));
        cur.insert(cur.begin(), Rational(0));  // multiply by x
        cur = poly::mod(cur, data->phi);
    }
    data_ = std::move(data);
}

int CycContext::order() const noexcept { return data_->n; }
int CycContext::root_exponent() const noexcept { return data_->t; }
int CycContext::degree() const noexcept {
    return poly::degree(data_->phi);
}
const poly::Poly& CycContext::modulus() const noexcept { return data_->phi; }

CycScalar CycContext::zero() const {
    return CycScalar(*this, std::vector<Rational>(degree(), Rational(0)));
}

CycScalar CycContext::one() const { return from_integer(1); }

CycScalar CycContext::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = r;
    return CycScalar(*this, std::move(c));
}

CycScalar CycContext::from_integer(long v) const {
    return from_rational(Rational(v));
}

CycScalar CycContext::omega_pow(long long k) const {
    const int n = data_->n;
    long long km = k % n;
    if (km < 0) km += n;
    const long long e = (static_cast<long long>(data_->t) * km) % n;
    return CycScalar(*this, data_->zeta_pow[static_cast<std::size_t>(e)]);
}

CycScalar CycContext::omega() const { return omega_pow(1); }

bool CycContext::same_field(const CycContext& other) const noexcept {
    return data_->n == other.data_->n && data_->t == other.data_->t;
}

CycScalar::CycScalar(CycContext ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != ctx_.degree())
        throw std::invalid_argument("scalar coefficient vector has wrong length");
}

void CycScalar::check_same(const CycScalar& o) const {
    if (!ctx_.same_field(o.ctx_))
        throw ContextMismatchError("scalars belong to different contexts");
}

bool CycScalar::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycScalar CycScalar::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return CycScalar(ctx_, std::move(c));
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    check_same(o);
    poly::Poly a(c_.begin(), c_.end());
    poly::Poly b(o.c_.begin(), o.c_.end());
    poly::trim(a);
    poly::trim(b);
    poly::Poly prod = poly::mod(poly::mul(a, b), ctx_.modulus());
    std::vector<Rational> c(ctx_.degree(), Rational(0));
    for (std::size_t i = 0; i < prod.size(); ++i) c[i] = prod[i];
    c_ = std::move(c);
    return *this;
}

bool CycScalar::operator==(const CycScalar& o) const {
    check_same(o);
    return c_ == o.c_;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
    poly::Poly a(c_.begin(), c_.end());
    poly::trim(a);
    auto res = poly::xgcd(a, ctx_.modulus());
    // Phi_n is irreducible over Q, so the gcd with any nonzero representative
    // is the constant 1 and s is the inverse mod Phi_n.
    if (poly::degree(res.g) != 0)
        throw std::logic_error("nonconstant gcd against the cyclotomic modulus");
    poly::Poly inv = poly::mod(poly::scale(res.s, 1 / res.g[0]), ctx_.modulus());
    std::vector<Rational> c(ctx_.degree(), Rational(0));
    for (std::size_t i = 0; i < inv.size(); ++i) c[i] = inv[i];
    return CycScalar(ctx_, std::move(c));
}

CycScalar CycScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar base = *this;
    CycScalar acc = ctx_.one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string CycScalar::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string base;
        if (k == 1)
            base = "w";
        else if (k > 1)
            base = "w^" + std::to_string(k);
        if (base.empty()) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << base;
        } else {
            out << to_string(mag) << "*" << base;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace taft
