#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semenc {

// Default ceiling on exhaustively enumerated state spaces. Overridable per
// call and, in the CLI, via the SEMENC_STATE_CAP environment variable.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

// Default ceiling on atom universes for exact model enumeration.
inline constexpr std::size_t kDefaultAtomCap = 20;

// Hard limit on universe size imposed by the bitmask representation.
inline constexpr std::size_t kMaxUniverseAtoms = 64;

// Tolerance used when matching computed neuron values against finite domains.
inline constexpr double kValueTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (state space, universe size, fan-in) was exceeded.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Malformed input text; carries a 1-based line (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t col = 0)
      : Error(line ? "line " + std::to_string(line) +
                         (col ? ":" + std::to_string(col) : "") + ": " + what
                   : what),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// A constructed object or operation argument violates a stated precondition.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Locale-independent decimal rendering with 9 significant digits; all
// user-facing reports go through this so golden outputs stay byte-stable.
std::string format_real(double value);

}  // namespace semenc
