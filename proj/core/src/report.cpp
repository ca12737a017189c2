#include "semenc/report.hpp"

#include "semenc/common.hpp"

namespace semenc {

std::string FidelityReport::to_string() const {
  std::string out = measure + " = " + format_real(value) + "\n";
  for (const auto& e : breakdown) {
    out += "  " + e.label + ": " + format_real(e.value);
    out += e.satisfied ? "  [satisfied]" : "  [violated]";
    out += "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

}  // namespace semenc
