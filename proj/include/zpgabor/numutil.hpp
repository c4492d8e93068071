#pragma once

#include <cstdint>
#include <stdexcept>

namespace zpgabor {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t f = 3; static_cast<std::uint64_t>(f) * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

/// p^d with overflow guard; throws if the result exceeds limit.
inline std::int64_t checked_pow(std::uint32_t p, std::uint32_t d, std::int64_t limit) {
    std::int64_t r = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        if (r > limit / static_cast<std::int64_t>(p)) {
            throw std::overflow_error("checked_pow: p^d exceeds limit");
        }
        r *= static_cast<std::int64_t>(p);
    }
    return r;
}

/// Nonnegative residue of v mod m (m > 0).
inline std::int64_t pos_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace zpgabor
