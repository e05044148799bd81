#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace permwalsh {

/// Outcome of one verifier: how many instances were checked and the first
/// counterexample, if any.
struct Check {
    std::string id;
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;

    explicit Check(std::string name) : id(std::move(name)) {}

    /// Counts one instance; `describe` is only invoked for the first failure.
    template <class Describe>
    bool record(bool ok, Describe&& describe) {
        ++checked;
        if (!ok && passed) {
            passed = false;
            counterexample = std::forward<Describe>(describe)();
        }
        return ok;
    }

    bool record(bool ok, const char* what) {
        return record(ok, [&] { return std::string(what); });
    }

    /// Folds in a partial result; the earlier counterexample wins.
    void merge(const Check& other) {
        checked += other.checked;
        if (!other.passed && passed) {
            passed = false;
            counterexample = other.counterexample;
        }
    }
};

}  // namespace permwalsh
