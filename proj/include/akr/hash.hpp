#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace akr {

// 64-bit FNV-1a, used for marked-set and config fingerprints.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

}  // namespace akr
