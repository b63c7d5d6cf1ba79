#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace wenonn {

// 64-bit FNV-1a. Used for checkpoint ids and config digests, not for security.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(std::string_view text);

/// 16 lowercase hex digits.
std::string hex_digest(std::uint64_t value);

}  // namespace wenonn
