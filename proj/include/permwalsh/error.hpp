#pragma once

#include <stdexcept>
#include <string>

namespace permwalsh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OddExtensionDegree : public Error {
public:
    explicit OddExtensionDegree(int e)
        : Error("extension degree e=" + std::to_string(e) + " must be even and in [2, 16]") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("inverse of zero") {}
};

class ZeroArgument : public Error {
public:
    explicit ZeroArgument(const std::string& what) : Error(what + ": argument must be nonzero") {}
};

class ZeroAlpha : public Error {
public:
    ZeroAlpha() : Error("alpha must be a nonzero element of GF(q)") {}
};

class NotInMu : public Error {
public:
    NotInMu() : Error("argument is not in the unit circle mu_{q+1}") {}
};

class AlphaNotCube : public Error {
public:
    AlphaNotCube() : Error("alpha must be a nonzero cube of GF(q)") {}
};

class NotAPermutation : public Error {
public:
    NotAPermutation() : Error("sigma is not injective on GF(q^2); field arithmetic is broken") {}
};

/// A table-based operation was asked for a field too large to tabulate.
class CapacityExceeded : public Error {
public:
    explicit CapacityExceeded(int e)
        : Error("e=" + std::to_string(e) + " is too large for full GF(q^2) tables (max 10)") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Command-line alpha that is malformed, zero, or outside GF(q).
class BadAlpha : public Error {
public:
    explicit BadAlpha(const std::string& why) : Error("bad --alpha: " + why) {}
};

} // namespace permwalsh
