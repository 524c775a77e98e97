/* petrel - hardened PE/COFF and Terse Executable image loader
 *
 * Copyright (c) 2026, the petrel authors. All rights reserved.
 * SPDX-License-Identifier: BSD-2-Clause
 */

#ifndef PETREL_SUPPORT_CHECKED_HPP
#define PETREL_SUPPORT_CHECKED_HPP

#include <cstdint>
#include <optional>

namespace petrel {

// All size and offset arithmetic in the library goes through these helpers
// in 64-bit unsigned space. A wrap is a verification failure, never a value.

inline std::optional<uint64_t> checked_add(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        return std::nullopt;
    }
    return r;
}

inline std::optional<uint64_t> checked_mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        return std::nullopt;
    }
    return r;
}

inline std::optional<uint64_t> checked_sub(uint64_t a, uint64_t b) {
    if (b > a) {
        return std::nullopt;
    }
    return a - b;
}

} // namespace petrel

#endif
