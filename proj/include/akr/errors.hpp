#pragma once

#include <stdexcept>

namespace akr {

// Invalid parameters, malformed configuration, violated placement constraints.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem and stream failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace akr
