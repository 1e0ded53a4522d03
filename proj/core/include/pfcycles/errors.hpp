#pragma once

#include <stdexcept>
#include <string>

namespace pfcycles {

/// Raised when a request exceeds a default size guard (e.g. full enumeration
/// above n = 8) and the caller did not pass `force`.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold by construction did not. Signals a bug,
/// never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pfcycles
