#pragma once

// Predicted Walsh value sets and multiplicities of f_alpha, by branch.

#include <cstdint>
#include <set>

#include "walsh.hpp"

namespace permwalsh {

/// Full distribution: noncube {q: q(q+1)/2, -q: q(q-1)/2}; cube with e = 2
/// {2q: 3q/4, -2q: q/4, 0: q^2 - q}; cube with e >= 4
/// {2q: q(q+2)/8, -2q: q(q-2)/8, 0: 3q^2/4}.
inline Histogram predicted_distribution(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    const auto n = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
    if (!cube) return {{-q, n(q * (q - 1) / 2)}, {q, n(q * (q + 1) / 2)}};
    if (e == 2) return {{-2 * q, n(q / 4)}, {0, n(q * q - q)}, {2 * q, n(3 * q / 4)}};
    return {{-2 * q, n(q * (q - 2) / 8)}, {0, n(3 * q * q / 4)}, {2 * q, n(q * (q + 2) / 8)}};
}

/// Values taken on beta in GF(q).
inline std::set<std::int64_t> predicted_inner_values(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    if (cube) return {-2 * q, 2 * q};
    return {q};
}

/// Values taken on beta in GF(q^2) \ GF(q).
inline std::set<std::int64_t> predicted_outer_values(int e, bool cube) {
    const std::int64_t q = std::int64_t{1} << e;
    if (!cube) return {-q, q};
    if (e == 2) return {0};
    return {-2 * q, 0, 2 * q};
}

/// Allowed exact-scale Hadamard values of the shell word U_delta.
inline std::set<std::int64_t> predicted_shell_values(int e, bool cube) {
    return predicted_outer_values(e, cube);
}

/// Number of nonzero outer coefficients in the cube branch, q(q-4)/4.
inline std::uint64_t predicted_outer_nonzero(int e) {
    const std::uint64_t q = std::uint64_t{1} << e;
    return q * (q - 4) / 4;
}

inline std::set<std::int64_t> support(const Histogram& h) {
    std::set<std::int64_t> s;
    for (const auto& [v, n] : h) s.insert(v);
    return s;
}

}  // namespace permwalsh
