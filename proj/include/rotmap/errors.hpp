#pragma once

#include <stdexcept>
#include <string>

namespace rotmap {

// Thrown when two permutations (or wreath elements) of different degree
// are combined.
struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Invalid (m, s, family) or other out-of-domain argument.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Group closure grew past the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The <sigma1>-walk from the base vertex returned early, so it is not a
// cycle of the graph.
struct BaseWalkNotCycle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented hypothesis of an operation does not hold for the input.
struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires an enumerated group.
struct NotEnumerated : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rotmap
