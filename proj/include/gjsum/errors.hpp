#pragma once

#include <stdexcept>
#include <string>

namespace gjsum {

// Bad user input: malformed descriptors, invalid parameters, violated
// preconditions. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified identity failed to hold. CLI exit code 1.
struct check_failure : std::runtime_error {
    explicit check_failure(const std::string& msg) : std::runtime_error(msg) {}
};

// The library detected an inconsistency in its own results (for example a
// character table that fails orthogonality). Never silent. CLI exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gjsum
