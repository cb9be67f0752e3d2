#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdr {

// Input outside an operation's mathematical domain (non-ample divisor,
// value <= 1 fed to the expansion, ...).
using domain_error = std::domain_error;

// Configuration the library deliberately refuses (central (-1)-curve
// positions in the resolution graph).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition of the operation does not hold (e.g. the
// F-rationality criterion applied to a non-rational singularity).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input; position is a 0-based byte offset.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A cross-check that should be unconditionally true failed; indicates a
// bug, never bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace pdr
