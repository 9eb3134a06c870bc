#pragma once

#include <stdexcept>
#include <string>

namespace logquiver {

/// Bad user input: unknown catalog name, bad parameters, malformed files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A toric model whose data is internally inconsistent.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The correspondence needs an acyclic quiver; raised for cyclic ones.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scattering computation failed an internal consistency requirement.
struct ScatteringError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace logquiver
