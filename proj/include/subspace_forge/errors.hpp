#pragma once

#include <stdexcept>
#include <string>

namespace subspace_forge {

/// A caller-supplied parameter violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Serialized input could not be parsed or is structurally invalid.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace subspace_forge
