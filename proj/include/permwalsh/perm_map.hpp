#pragma once

// The permutation sigma(X) = X + X^d + X^(dq) of GF(q^2), its inverse (lookup
// table and closed form on the cosets of GF(q)^*), and the Boolean functions
// f_alpha(x) = Tr(alpha * sigma^{-1}(x)^3) and its cyclotomic twin g_alpha.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace permwalsh {

inline constexpr int kMaxTableE = 10;

inline void require_tabulable(const FieldCtx& ctx) {
    if (ctx.e() > kMaxTableE) throw CapacityExceeded(ctx.e());
}

/// Boolean function on GF(q^2); bit k is the value at decode(k).
class TruthTable {
public:
    TruthTable(int e, Elem alpha)
        : e_(e), alpha_(alpha), words_(((std::size_t{1} << (2 * e)) + 63) / 64, 0) {}

    int e() const noexcept { return e_; }
    Elem alpha() const noexcept { return alpha_; }
    std::size_t size() const noexcept { return std::size_t{1} << (2 * e_); }

    bool get(std::size_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1U; }
    void set(std::size_t k, bool v) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (k & 63);
        words_[k >> 6] = v ? (words_[k >> 6] | m) : (words_[k >> 6] & ~m);
    }

    /// Packed bits, 64 entries per word, entry k at bit k mod 64 of word k / 64.
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }

    friend bool operator==(const TruthTable& a, const TruthTable& b) noexcept {
        return a.e_ == b.e_ && a.words_ == b.words_;
    }

private:
    int e_;
    Elem alpha_;
    std::vector<std::uint64_t> words_;
};

/// sigma(x) = x + x^d + x^(dq).
inline Elem2 sigma_eval(const FieldCtx& ctx, Elem2 x) {
    const Elem2 xd = ctx.pow_u(x, ctx.d());
    return x + xd + FieldCtx::conj(xd);
}

/// sigma and its inverse, both indexed by FieldCtx::encode.
struct SigmaTable {
    std::vector<Elem2> forward;
    std::vector<Elem2> backward;

    Elem2 apply(const FieldCtx& ctx, Elem2 x) const { return forward[ctx.encode(x)]; }
    Elem2 invert(const FieldCtx& ctx, Elem2 x) const { return backward[ctx.encode(x)]; }
};

/// Tabulates sigma on all of GF(q^2) and inverts it; throws NotAPermutation if
/// two inputs collide.
inline SigmaTable sigma_inverse_table(const FieldCtx& ctx) {
    require_tabulable(ctx);
    const auto n = static_cast<std::size_t>(ctx.q2());
    SigmaTable t;
    t.forward.resize(n);
    t.backward.resize(n);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const Elem2 x = ctx.decode(static_cast<std::uint32_t>(k));
        const Elem2 y = sigma_eval(ctx, x);
        const auto ky = ctx.encode(y);
        if (seen[ky]) throw NotAPermutation();
        seen[ky] = true;
        t.forward[k] = y;
        t.backward[ky] = x;
    }
    return t;
}

/// Decomposition of GF(q^2)^* into the q + 1 cosets u^i GF(q)^*.
///
/// x lies in u^i GF(q)^* iff x^(q-1) = u^(i(q-1)); since gcd(q-1, q+1) = 1 the
/// index i is recovered from a table of the q + 1 values u^(i(q-1)).
class CosetIndex {
public:
    explicit CosetIndex(const FieldCtx& ctx) : ctx_(&ctx) {
        const auto mu = ctx.mu_elements();
        reps_ = mu;
        lookup_.reserve(mu.size());
        multiplier_.reserve(mu.size());
        cubic_coeff_.reserve(mu.size());
        for (std::uint32_t i = 0; i < mu.size(); ++i) {
            const Elem2 z = mu[i];
            lookup_.emplace(ctx.encode(ctx.pow_u(z, ctx.q() - 1)), i);
            const Elem2 z2 = ctx.sqr(z);
            const Elem2 denom = FieldCtx::one2() + z2 + ctx.inv(z2);
            // 1 + z^2 + z^-2 is Frobenius-fixed and nonzero for z in mu_{q+1}.
            multiplier_.push_back(ctx.div(z2, denom));
            cubic_coeff_.push_back(ctx.div(ctx.pow_u(z, 6), ctx.pow_u(denom, 3)));
        }
    }

    /// The i in [0, q] with x in u^i GF(q)^*; x must be nonzero.
    std::uint32_t index_of(Elem2 x) const {
        if (x.is_zero()) throw ZeroArgument("coset index");
        const Elem2 w = ctx_->div(FieldCtx::conj(x), x);  // x^(q-1)
        return lookup_.at(ctx_->encode(w));
    }

    /// u^i.
    Elem2 representative(std::uint32_t i) const { return reps_.at(i); }
    /// z^2 / (1 + z^2 + z^-2) for z = u^i.
    Elem2 multiplier(std::uint32_t i) const { return multiplier_.at(i); }
    /// u^(6i) / (1 + u^(2i) + u^(-2i))^3.
    Elem2 cubic_coefficient(std::uint32_t i) const { return cubic_coeff_.at(i); }

    const FieldCtx& ctx() const noexcept { return *ctx_; }

private:
    const FieldCtx* ctx_;
    std::vector<Elem2> reps_;
    std::unordered_map<std::uint32_t, std::uint32_t> lookup_;
    std::vector<Elem2> multiplier_;
    std::vector<Elem2> cubic_coeff_;
};

/// sigma^{-1}(x) = z^2 / (1 + z^2 + z^-2) * x for x in z GF(q)^*, z in mu_{q+1}.
inline Elem2 sigma_inverse_closed(const CosetIndex& cosets, Elem2 x) {
    if (x.is_zero()) return x;
    return cosets.ctx().mul(cosets.multiplier(cosets.index_of(x)), x);
}

/// f_alpha(x) = Tr_{q^2}(alpha * sigma^{-1}(x)^3).
inline TruthTable f_alpha_table(const FieldCtx& ctx, const SigmaTable& sigma, Elem alpha) {
    if (alpha.is_zero()) throw ZeroAlpha();
    TruthTable tt(ctx.e(), alpha);
    for (std::size_t k = 0; k < tt.size(); ++k) {
        const Elem2 y = sigma.backward[k];
        tt.set(k, ctx.tr2(ctx.mul(alpha, ctx.mul(ctx.sqr(y), y))) != 0);
    }
    return tt;
}

inline TruthTable f_alpha_table(const FieldCtx& ctx, Elem alpha) {
    if (alpha.is_zero()) throw ZeroAlpha();
    return f_alpha_table(ctx, sigma_inverse_table(ctx), alpha);
}

/// g_alpha(0) = 0 and g_alpha(x) = Tr(alpha u^(6i) / (1 + u^(2i) + u^(-2i))^3 x^3)
/// for x in u^i GF(q)^*.
inline TruthTable g_alpha_table(const FieldCtx& ctx, const CosetIndex& cosets, Elem alpha) {
    if (alpha.is_zero()) throw ZeroAlpha();
    require_tabulable(ctx);
    TruthTable tt(ctx.e(), alpha);
    // Walk each coset u^i GF(q)^* directly instead of locating x's coset.
    for (std::uint32_t i = 0; i <= ctx.q(); ++i) {
        const Elem2 z = cosets.representative(i);
        const Elem2 coeff = ctx.mul(alpha, cosets.cubic_coefficient(i));
        for (std::uint32_t yb = 1; yb < ctx.q(); ++yb) {
            const Elem2 x = ctx.mul(Elem{yb}, z);
            tt.set(ctx.encode(x), ctx.tr2(ctx.mul(coeff, ctx.mul(ctx.sqr(x), x))) != 0);
        }
    }
    return tt;
}

inline TruthTable g_alpha_table(const FieldCtx& ctx, Elem alpha) {
    return g_alpha_table(ctx, CosetIndex(ctx), alpha);
}

}  // namespace permwalsh
