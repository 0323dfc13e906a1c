#pragma once

#include <stdexcept>
#include <string>

namespace horikawa {

/// Input violates the documented precondition of an operation.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invariant bookkeeping produced an inconsistent result (e.g. Noether's formula fails).
struct accounting_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Should be unreachable for valid input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace horikawa
