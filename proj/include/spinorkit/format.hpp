#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace spinorkit {

// Shortest round-trip decimal form, locale independent, so emitted reports
// are byte-stable across runs and platforms.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace spinorkit
