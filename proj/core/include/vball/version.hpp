#pragma once

#include <cstdint>

namespace vball {

inline constexpr const char* kVersion = "0.1.0";

// Every randomized routine is seeded; this is the shared default.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace vball
