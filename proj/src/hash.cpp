#include "akr/hash.hpp"

#include <cstdio>

namespace akr {

std::string to_hex(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace akr
