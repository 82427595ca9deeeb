#pragma once

#include <stdexcept>
#include <string>

namespace gfa {

// Input-side failures: the caller handed us something malformed.
struct NotAGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotExpandable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal-consistency failures. Any of these means a bug in the engine,
// never a property of valid input.
struct InterpolationNotIntegral : std::logic_error {
  using std::logic_error::logic_error;
};
struct NegativeGeneratorCount : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gfa
