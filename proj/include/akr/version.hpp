#pragma once

namespace akr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace akr
