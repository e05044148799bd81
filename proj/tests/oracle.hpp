#pragma once

// Slow reference arithmetic for tests. No tables, no shared code with the
// library: GF(2^e) is polynomial arithmetic mod the smallest irreducible found
// by trial division, GF(q^2) is the tower with t^2 = t + lambda + 1, and
// traces are literal Frobenius sums.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 clmul(u64 a, u64 b) {
    u64 r = 0;
    for (int i = 0; i < 64; ++i)
        if ((b >> i) & 1U) r ^= a << i;
    return r;
}

inline int degree(u64 p) {
    int d = -1;
    for (int i = 0; i < 64; ++i)
        if ((p >> i) & 1U) d = i;
    return d;
}

inline u64 mod(u64 a, u64 m) {
    const int dm = degree(m);
    for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
    return a;
}

inline bool irreducible_by_division(u64 f) {
    const int n = degree(f);
    for (u64 g = 2; degree(g) <= n / 2; ++g)
        if (mod(f, g) == 0) return false;
    return true;
}

struct Field {
    int e;
    u64 q;
    u64 modulus = 0;
    u64 lambda = 0;

    explicit Field(int e_) : e(e_), q(u64{1} << e_) {
        for (u64 f = (u64{1} << e) | 1U; modulus == 0; f += 2)
            if (irreducible_by_division(f)) modulus = f;
        for (u64 a = 1; lambda == 0; ++a)
            if (tr(a) == 1) lambda = a;
    }

    u64 mul(u64 a, u64 b) const { return mod(clmul(a, b), modulus); }

    u64 pow(u64 a, u64 n) const {
        u64 r = 1;
        for (; n != 0; n >>= 1, a = mul(a, a))
            if (n & 1U) r = mul(r, a);
        return r;
    }

    u64 inv(u64 a) const { return pow(a, q - 2); }

    // sum of a^(2^i), i < e
    int tr(u64 a) const {
        u64 s = 0, x = a;
        for (int i = 0; i < e; ++i, x = mul(x, x)) s ^= x;
        return static_cast<int>(s);  // 0 or 1
    }

    bool is_cube(u64 a) const {
        for (u64 y = 1; y < q; ++y)
            if (mul(y, mul(y, y)) == a) return true;
        return false;
    }

    // -- tower, pairs (a0, a1) = a0 + a1 t ------------------------------------

    using E2 = std::pair<u64, u64>;

    E2 mul2(E2 x, E2 y) const {
        const u64 hi = mul(x.second, y.second);
        return {mul(x.first, y.first) ^ mul(hi, lambda ^ 1U),
                mul(x.first, y.second) ^ mul(x.second, y.first) ^ hi};
    }

    E2 pow2(E2 x, u64 n) const {
        E2 r{1, 0};
        for (; n != 0; n >>= 1, x = mul2(x, x))
            if (n & 1U) r = mul2(r, x);
        return r;
    }

    // sum of x^(2^i), i < 2e
    int tr2(E2 x) const {
        E2 s{0, 0};
        for (int i = 0; i < 2 * e; ++i, x = mul2(x, x)) s = {s.first ^ x.first, s.second ^ x.second};
        return static_cast<int>(s.first);
    }

    u64 enc(E2 x) const { return x.first | (x.second << e); }
    E2 dec(u64 k) const { return {k & (q - 1), k >> e}; }

    E2 sigma(E2 x) const {
        const u64 d = (q * q + q + 1) / 3;
        const E2 xd = pow2(x, d);
        const E2 xdq = pow2(xd, q);
        return {x.first ^ xd.first ^ xdq.first, x.second ^ xd.second ^ xdq.second};
    }

    // sigma^{-1} by exhaustive search
    std::vector<u64> sigma_inverse() const {
        std::vector<u64> back(q * q);
        for (u64 k = 0; k < q * q; ++k) back[enc(sigma(dec(k)))] = k;
        return back;
    }

    std::vector<int> f_alpha(u64 alpha) const {
        const auto back = sigma_inverse();
        std::vector<int> f(q * q);
        for (u64 k = 0; k < q * q; ++k) {
            const E2 y = dec(back[k]);
            f[k] = tr2(mul2({alpha, 0}, mul2(y, mul2(y, y))));
        }
        return f;
    }

    std::int64_t walsh(const std::vector<int>& f, E2 beta) const {
        std::int64_t w = 0;
        for (u64 k = 0; k < q * q; ++k) w += ((f[k] ^ tr2(mul2(beta, dec(k)))) != 0) ? -1 : 1;
        return w;
    }
};

}  // namespace oracle
