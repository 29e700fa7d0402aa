// Error taxonomy: invalid input vs broken internal invariant.
//
// input_error    -> CLI exit code 1 (bad document, unsupported weights, ...)
// invariant_error -> CLI exit code 2 (an identity the pipeline relies on
//                    failed; always a bug or corrupt state, never user error)
#pragma once

#include <stdexcept>
#include <string>

namespace mdsurf {

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Internal consistency check. Unlike assert(), stays on in release builds:
// every identity this engine relies on is cheap relative to the Pfaffians.
inline void check(bool cond, const std::string& what) {
    if (!cond) throw invariant_error(what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw input_error(what);
}

} // namespace mdsurf
