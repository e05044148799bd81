#pragma once

// Text encodings: an element of GF(q) is the lowercase hex of its bit-vector
// integer (bit i = coefficient of x^i); an element of GF(q^2) is "a0+a1*t".

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "error.hpp"
#include "field.hpp"

namespace permwalsh {

inline std::string to_hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string to_string(Elem a) { return to_hex(a.bits); }
inline std::string to_string(Elem2 x) { return to_hex(x.a0.bits) + "+" + to_hex(x.a1.bits) + "*t"; }

inline std::uint64_t parse_hex(std::string_view s) {
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.empty() || s.size() > 16) throw ParseError("bad hex literal");
    std::uint64_t v = 0;
    for (char ch : s) {
        const int c = std::tolower(static_cast<unsigned char>(ch));
        int digit;
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (c >= 'a' && c <= 'f')
            digit = c - 'a' + 10;
        else
            throw ParseError("bad hex digit in '" + std::string(s) + "'");
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    return v;
}

/// Parses a GF(q) element; throws ParseError when out of range.
inline Elem parse_elem(const FieldCtx& ctx, std::string_view s) {
    const auto v = parse_hex(s);
    if (v >= ctx.q()) throw ParseError("element '" + std::string(s) + "' does not fit GF(2^" + std::to_string(ctx.e()) + ")");
    return Elem{static_cast<std::uint32_t>(v)};
}

/// Parses "a0+a1*t".
inline Elem2 parse_elem2(const FieldCtx& ctx, std::string_view s) {
    const auto plus = s.find('+');
    if (plus == std::string_view::npos || s.size() < plus + 3 || s.substr(s.size() - 2) != "*t")
        throw ParseError("expected a0+a1*t, got '" + std::string(s) + "'");
    return Elem2{parse_elem(ctx, s.substr(0, plus)), parse_elem(ctx, s.substr(plus + 1, s.size() - plus - 3))};
}

}  // namespace permwalsh
