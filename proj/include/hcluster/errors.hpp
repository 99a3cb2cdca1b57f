#pragma once

#include <stdexcept>
#include <string>

namespace hcluster {

// Thrown when vector dimensions or item counts do not line up.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when input data violates a structural invariant (NaN, negative
// frequency, duplicate label, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by text readers; carries a human-readable location in the message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown for out-of-range arguments (cut count, cut height, indices).
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hcluster
