#pragma once

// Exact Walsh spectra of Boolean functions on GF(q^2):
//   W_f(beta) = sum_x (-1)^(f(x) + Tr(beta x)).
// walsh_naive evaluates one coefficient from the definition; walsh_full runs the
// butterfly transform over encode() coordinates and then re-indexes through the
// trace Gram matrix, so coeffs[encode(beta)] = W_f(beta).

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"
#include "perm_map.hpp"

namespace permwalsh {

/// Walsh value -> multiplicity, ascending by value.
using Histogram = std::map<std::int64_t, std::uint64_t>;

struct Spectrum {
    int e = 0;
    std::vector<std::int64_t> coeffs;  // indexed by encode(beta)
    Histogram histogram;
    Histogram inner;  // beta in GF(q)
    Histogram outer;  // beta in GF(q^2) \ GF(q)
};

/// Mask m with Tr_{q^2}(beta x) = parity(m & encode(x)), obtained by evaluating
/// the functional on the basis vectors with field multiplication.
inline std::uint32_t trace_functional(const FieldCtx& ctx, Elem2 beta) {
    std::uint32_t m = 0;
    for (int j = 0; j < 2 * ctx.e(); ++j)
        m |= static_cast<std::uint32_t>(ctx.tr2(ctx.mul(beta, ctx.decode(1U << j)))) << j;
    return m;
}

/// W_f(beta) straight from the definition (word-parallel over the table).
inline std::int64_t walsh_naive(const FieldCtx& ctx, const TruthTable& tt, Elem2 beta) {
    const std::uint32_t m = trace_functional(ctx, beta);
    const std::size_t n = tt.size();
    const std::uint64_t valid = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t low = 0;  // bit r set iff parity(m & r) = 1, r < 64
    for (std::uint32_t r = 0; r < 64; ++r) low |= std::uint64_t(std::popcount(m & r) & 1) << r;
    std::uint64_t ones = 0;
    const auto& w = tt.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        const bool flip = std::popcount(m & static_cast<std::uint32_t>(k << 6)) & 1;
        const std::uint64_t lin = flip ? ~low : low;
        ones += static_cast<std::uint64_t>(std::popcount((w[k] ^ lin) & valid));
    }
    return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(ones);
}

/// Rows of the GF(2) Gram matrix G[i][j] = Tr_{q^2}(b_i b_j) for the basis
/// b_j = decode(1 << j); row i is stored as a bitmask over j.
inline std::vector<std::uint32_t> trace_gram_matrix(const FieldCtx& ctx) {
    const int n = 2 * ctx.e();
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const Elem2 bi = ctx.decode(1U << i);
        for (int j = 0; j < n; ++j)
            rows[i] |= static_cast<std::uint32_t>(ctx.tr2(ctx.mul(bi, ctx.decode(1U << j)))) << j;
    }
    return rows;
}

/// G * k over GF(2).
inline std::uint32_t apply_gram(std::span<const std::uint32_t> rows, std::uint32_t k) noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; k != 0; ++i, k >>= 1)
        if (k & 1U) m ^= rows[i];
    return m;
}

/// In-place unnormalized Walsh-Hadamard butterfly; size must be a power of two.
inline void fwht(std::span<std::int64_t> a) noexcept {
    for (std::size_t h = 1; h < a.size(); h <<= 1) {
        for (std::size_t i = 0; i < a.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = a[j];
                const std::int64_t y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

inline std::pair<Histogram, Histogram> split_inner_outer(const FieldCtx& ctx, const Spectrum& s) {
    Histogram inner, outer;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        const Elem2 beta = ctx.decode(static_cast<std::uint32_t>(k));
        if (FieldCtx::conj(beta) == beta)
            ++inner[s.coeffs[k]];
        else
            ++outer[s.coeffs[k]];
    }
    return {std::move(inner), std::move(outer)};
}

inline Spectrum walsh_full(const FieldCtx& ctx, const TruthTable& tt,
                           std::span<const std::uint32_t> gram) {
    const std::size_t n = tt.size();
    std::vector<std::int64_t> buf(n);
    for (std::size_t k = 0; k < n; ++k) buf[k] = tt.get(k) ? -1 : 1;
    fwht(buf);
    Spectrum s;
    s.e = ctx.e();
    s.coeffs.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.coeffs[k] = buf[apply_gram(gram, static_cast<std::uint32_t>(k))];
        ++s.histogram[s.coeffs[k]];
    }
    std::tie(s.inner, s.outer) = split_inner_outer(ctx, s);
    return s;
}

inline Spectrum walsh_full(const FieldCtx& ctx, const TruthTable& tt) {
    return walsh_full(ctx, tt, trace_gram_matrix(ctx));
}

/// Bent iff every coefficient is +q or -q.
inline bool is_bent(const Spectrum& s) {
    const std::int64_t q = std::int64_t{1} << s.e;
    for (const auto& [v, n] : s.histogram)
        if (v != q && v != -q) return false;
    return !s.histogram.empty();
}

inline std::int64_t coeff_sum(const Spectrum& s) noexcept {
    std::int64_t t = 0;
    for (auto w : s.coeffs) t += w;
    return t;
}

inline std::int64_t coeff_square_sum(const Spectrum& s) noexcept {
    std::int64_t t = 0;
    for (auto w : s.coeffs) t += w * w;
    return t;
}

}  // namespace permwalsh
