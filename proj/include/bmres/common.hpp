#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmres {

// Bad user input: malformed files, unknown variables, invalid orders.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds a documented capacity bound (symbol
// capacity, enumeration cap, lcm-lattice cap, coefficient overflow).
// The CLI maps this to exit code 3.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal cross-check failure (two routes that must agree disagreed).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

using Exponent = std::int32_t;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw capacity_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw capacity_error("integer overflow in multiplication");
    return r;
}

// Generator-count capacity: symbols are machine-word bitmasks.
inline constexpr int kSymbolCapacity = 63;

// Full subset enumeration (matchings, Scarf, base digraph) is bounded here.
inline constexpr int kEnumerationCap = 22;

// The homology oracle builds strands of the Taylor complex.
inline constexpr int kOracleCap = 16;

// lcm-lattice size guard for the oracle.
inline constexpr std::size_t kLatticeCap = std::size_t{1} << 20;

}  // namespace bmres
