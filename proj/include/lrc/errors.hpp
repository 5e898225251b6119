#pragma once

#include <stdexcept>

namespace lrc {

// Raised when a decode/repair is information-theoretically impossible for
// the given survivors (as opposed to misuse of the API). The CLI maps this
// to its own exit code.
struct decode_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lrc
