#pragma once

#include <stdexcept>
#include <string>

namespace turannical {

// Thrown for out-of-range or inconsistent arguments. The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a count does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ParameterError(message);
}

}  // namespace turannical
