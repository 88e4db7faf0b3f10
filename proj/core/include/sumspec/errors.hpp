#pragma once

#include <stdexcept>
#include <string>

namespace sumspec {

// Input outside the declared 64-bit-exact operating range.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& msg) : std::out_of_range(msg) {}
};

// Structurally valid input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace sumspec
