/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <charconv>
#include <string>

namespace orsched::detail {

// Shortest decimal form that parses back to the same double.
inline std::string format_number(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace orsched::detail
