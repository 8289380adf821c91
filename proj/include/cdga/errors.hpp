#pragma once
#include <stdexcept>
#include <string>

namespace cdga {

// Bad input: mismatched algebras, wrong degrees, unmet preconditions.
// The command line maps this to exit code 1.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A differential or structure-constant table that fails its own laws
// (d*d != 0, Jacobi violation, inhomogeneous d-line). Exit code 1 as well.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same quantity disagreed. This is
// an engine bug, never a user error. Exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace cdga
