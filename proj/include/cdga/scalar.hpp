#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace cdga {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need for
// deterministic output.
using Scalar = boost::multiprecision::cpp_rational;

inline std::string to_string(const Scalar& s) {
    return s.str();
}

// Accepts "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Scalar> parse_scalar(const std::string& text);

} // namespace cdga
