#pragma once

// Exact arithmetic in GF(q), q = 2^e with e even, and in the quadratic tower
// GF(q^2) = GF(q)[t] / (t^2 + t + lambda + 1).

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace permwalsh {

/// Element of GF(q): coordinates in the power basis of the base modulus,
/// bit i is the coefficient of x^i.
struct Elem {
    std::uint32_t bits = 0;

    constexpr bool is_zero() const noexcept { return bits == 0; }
    constexpr auto operator<=>(const Elem&) const = default;
};

constexpr Elem operator+(Elem a, Elem b) noexcept { return Elem{a.bits ^ b.bits}; }
constexpr Elem& operator+=(Elem& a, Elem b) noexcept { a.bits ^= b.bits; return a; }

/// Element a0 + a1*theta of GF(q^2).
struct Elem2 {
    Elem a0;
    Elem a1;

    constexpr bool is_zero() const noexcept { return a0.is_zero() && a1.is_zero(); }
    constexpr auto operator<=>(const Elem2&) const = default;
};

constexpr Elem2 operator+(Elem2 x, Elem2 y) noexcept { return Elem2{x.a0 + y.a0, x.a1 + y.a1}; }
constexpr Elem2& operator+=(Elem2& x, Elem2 y) noexcept { x = x + y; return x; }

/// Embedding GF(q) -> GF(q^2).
constexpr Elem2 lift(Elem a) noexcept { return Elem2{a, Elem{0}}; }

namespace detail {

// Polynomials over GF(2), bit i = coefficient of X^i.
inline int poly_degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) noexcept {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
    return a;
}

inline std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return poly_mod(clmul(a, b), m);
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Rabin's test: f of degree n is irreducible iff X^(2^n) = X mod f and
/// gcd(X^(2^(n/k)) - X, f) = 1 for every prime k | n.
inline bool is_irreducible(std::uint64_t f) {
    const int n = poly_degree(f);
    if (n < 1) return false;
    auto frob_power = [&](int times) {
        std::uint64_t r = 2;  // X
        for (int i = 0; i < times; ++i) r = poly_mulmod(r, r, f);
        return r;
    };
    if (frob_power(n) != poly_mod(2, f)) return false;
    for (auto k : prime_factors(static_cast<std::uint64_t>(n))) {
        const std::uint64_t h = frob_power(n / static_cast<int>(k)) ^ poly_mod(2, f);
        if (poly_degree(poly_gcd(f, h)) != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Immutable description of GF(2^e) and its tower GF(2^{2e}).
///
/// Every choice is deterministic: the base modulus is the smallest irreducible
/// polynomial of degree e (integer order), lambda the smallest trace-one element,
/// g the smallest generator of GF(q)^*, u = g2^(q-1) for the smallest generator g2
/// of GF(q^2)^* (integer order of encode()), and omega = g^((q-1)/3).
class FieldCtx {
public:
    static constexpr int kMaxE = 16;

    explicit FieldCtx(int e) : e_(e) {
        if (e < 2 || e > kMaxE || e % 2 != 0) throw OddExtensionDegree(e);
        q_ = 1U << e;
        order_ = q_ - 1;
        find_modulus();
        build_tables();
        build_trace();
        if (tr(one()) != 0) throw Error("Tr_q(1) != 0 for even e");  // unreachable
        for (std::uint32_t a = 1; a < q_; ++a) {
            if (tr(Elem{a}) == 1) {
                lambda_ = Elem{a};
                break;
            }
        }
        lambda_plus_one_ = lambda_ + one();
        omega_ = pow(generator_, order_ / 3);
        find_mu_generator();
    }

    // -- parameters --------------------------------------------------------
    int e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint64_t q2() const noexcept { return std::uint64_t{q_} * q_; }
    /// d = (q^2 + q + 1) / 3.
    std::uint64_t d() const noexcept { return (q2() + q_ + 1) / 3; }
    /// d' = q^2 - q + 1, the inverse of d modulo q^2 - 1.
    std::uint64_t d_prime() const noexcept { return q2() - q_ + 1; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    Elem lambda() const noexcept { return lambda_; }
    Elem generator() const noexcept { return generator_; }
    Elem omega() const noexcept { return omega_; }
    Elem2 mu_generator() const noexcept { return mu_generator_; }
    Elem2 tower_generator() const noexcept { return tower_generator_; }
    Elem2 theta() const noexcept { return Elem2{Elem{0}, one()}; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }
    static constexpr Elem2 zero2() noexcept { return Elem2{}; }
    static constexpr Elem2 one2() noexcept { return Elem2{Elem{1}, Elem{0}}; }

    // -- GF(q) ---------------------------------------------------------------
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        return Elem{exp_[log_[a.bits] + log_[b.bits]]};
    }
    Elem sqr(Elem a) const noexcept { return mul(a, a); }

    Elem inv(Elem a) const {
        if (a.is_zero()) throw DivisionByZero();
        return Elem{exp_[(order_ - log_[a.bits]) % order_]};
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::int64_t n) const {
        if (n < 0) {
            if (a.is_zero()) throw DivisionByZero();
            a = inv(a);
            n = -n;
        }
        if (n == 0) return one();
        if (a.is_zero()) return zero();
        const std::uint64_t k = (std::uint64_t{log_[a.bits]} * (static_cast<std::uint64_t>(n) % order_)) % order_;
        return Elem{exp_[k]};
    }

    /// Discrete logarithm to base g; a must be nonzero.
    std::uint32_t log(Elem a) const {
        if (a.is_zero()) throw ZeroArgument("log");
        return log_[a.bits];
    }
    Elem exp(std::uint64_t k) const noexcept { return Elem{exp_[k % order_]}; }

    /// Absolute trace GF(q) -> GF(2).
    int tr(Elem a) const noexcept { return std::popcount(a.bits & trace_mask_) & 1; }

    /// The unique square root, a^(q/2).
    Elem sqrt(Elem a) const noexcept {
        for (int i = 1; i < e_; ++i) a = sqr(a);
        return a;
    }

    /// True iff a = y^3 for some y in GF(q)^*.
    bool is_cube(Elem a) const {
        if (a.is_zero()) throw ZeroArgument("is_cube");
        return log_[a.bits] % 3 == 0;
    }

    // -- GF(q^2) -------------------------------------------------------------
    Elem2 mul(Elem2 x, Elem2 y) const noexcept {
        const Elem hi = mul(x.a1, y.a1);
        return Elem2{mul(x.a0, y.a0) + mul(hi, lambda_plus_one_), mul(x.a0, y.a1) + mul(x.a1, y.a0) + hi};
    }
    Elem2 mul(Elem c, Elem2 x) const noexcept { return Elem2{mul(c, x.a0), mul(c, x.a1)}; }
    Elem2 sqr(Elem2 x) const noexcept { return mul(x, x); }

    /// Frobenius x -> x^q; theta^q = theta + 1.
    static constexpr Elem2 conj(Elem2 x) noexcept { return Elem2{x.a0 + x.a1, x.a1}; }

    /// Norm x^(q+1) = x * conj(x), an element of GF(q).
    Elem norm(Elem2 x) const noexcept {
        return sqr(x.a0) + mul(x.a0, x.a1) + mul(sqr(x.a1), lambda_plus_one_);
    }

    Elem2 inv(Elem2 x) const {
        if (x.is_zero()) throw DivisionByZero();
        return mul(inv(norm(x)), conj(x));
    }
    Elem2 div(Elem2 x, Elem2 y) const { return mul(x, inv(y)); }

    Elem2 pow(Elem2 x, std::int64_t n) const {
        if (n < 0) {
            x = inv(x);
            n = -n;
        }
        return pow_u(x, static_cast<std::uint64_t>(n));
    }

    /// Square-and-multiply on an unsigned exponent.
    Elem2 pow_u(Elem2 x, std::uint64_t n) const noexcept {
        Elem2 r = one2();
        while (n != 0) {
            if (n & 1U) r = mul(r, x);
            x = sqr(x);
            n >>= 1;
        }
        return r;
    }

    /// Absolute trace GF(q^2) -> GF(2), computed as Tr_q(x + x^q) = Tr_q(a1).
    int tr2(Elem2 x) const noexcept { return tr(x.a1); }

    static constexpr bool in_base(Elem2 x) noexcept { return x.a1.is_zero(); }

    bool in_mu(Elem2 x) const noexcept { return !x.is_zero() && norm(x) == one(); }

    /// Integer encoding of an element of GF(q^2): a0 in the low e bits, a1 above.
    std::uint32_t encode(Elem2 x) const noexcept { return x.a0.bits | (x.a1.bits << e_); }
    Elem2 decode(std::uint32_t k) const noexcept { return Elem2{Elem{k & (q_ - 1)}, Elem{k >> e_}}; }

    /// u^0, u^1, ..., u^q.
    std::vector<Elem2> mu_elements() const {
        std::vector<Elem2> out;
        out.reserve(q_ + 1);
        Elem2 z = one2();
        for (std::uint32_t i = 0; i <= q_; ++i) {
            out.push_back(z);
            z = mul(z, mu_generator_);
        }
        return out;
    }

private:
    void find_modulus() {
        for (std::uint64_t p = std::uint64_t{1} << e_; p < (std::uint64_t{1} << (e_ + 1)); ++p) {
            if (detail::is_irreducible(p)) {
                modulus_ = static_cast<std::uint32_t>(p);
                return;
            }
        }
        throw Error("no irreducible polynomial found");  // unreachable
    }

    std::uint64_t slow_pow(std::uint64_t a, std::uint64_t n) const {
        std::uint64_t r = 1;
        while (n != 0) {
            if (n & 1U) r = detail::poly_mulmod(r, a, modulus_);
            a = detail::poly_mulmod(a, a, modulus_);
            n >>= 1;
        }
        return r;
    }

    void build_tables() {
        const auto factors = detail::prime_factors(order_);
        std::uint32_t g = 0;
        for (std::uint32_t a = 2; a < q_ && g == 0; ++a) {
            bool full = true;
            for (auto p : factors) full = full && slow_pow(a, order_ / p) != 1;
            if (full) g = a;
        }
        if (g == 0) throw Error("no generator found");  // unreachable
        generator_ = Elem{g};
        exp_.assign(2 * std::size_t{order_}, 0);
        log_.assign(q_, 0);
        std::uint64_t x = 1;
        for (std::uint32_t k = 0; k < order_; ++k) {
            exp_[k] = static_cast<std::uint32_t>(x);
            exp_[k + order_] = static_cast<std::uint32_t>(x);
            log_[x] = k;
            x = detail::poly_mulmod(x, g, modulus_);
        }
    }

    void build_trace() {
        trace_mask_ = 0;
        for (int i = 0; i < e_; ++i) {
            Elem a{1U << i};
            Elem s = a;
            for (int k = 1; k < e_; ++k) {
                a = sqr(a);
                s += a;
            }
            assert(s.bits <= 1);
            trace_mask_ |= s.bits << i;
        }
    }

    void find_mu_generator() {
        const std::uint64_t big = q2() - 1;
        const auto factors = detail::prime_factors(big);
        for (std::uint64_t k = 1; k < q2(); ++k) {
            const Elem2 x = decode(static_cast<std::uint32_t>(k));
            bool full = true;
            for (auto p : factors) full = full && pow_u(x, big / p) != one2();
            if (full) {
                tower_generator_ = x;
                break;
            }
        }
        mu_generator_ = pow_u(tower_generator_, order_);
    }

    int e_;
    std::uint32_t q_ = 0;
    std::uint32_t order_ = 0;  // q - 1
    std::uint32_t modulus_ = 0;
    std::uint32_t trace_mask_ = 0;
    Elem lambda_;
    Elem lambda_plus_one_;
    Elem generator_;
    Elem omega_;
    Elem2 tower_generator_;
    Elem2 mu_generator_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace permwalsh
