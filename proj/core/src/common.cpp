#include "semenc/common.hpp"

#include <charconv>
#include <cmath>

namespace semenc {

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

}  // namespace semenc
