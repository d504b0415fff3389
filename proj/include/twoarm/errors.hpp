#pragma once

#include <stdexcept>
#include <string>

namespace twoarm {

// Invalid request parameters or an unsupported design/endpoint combination.
// Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The size condition has no finite solution (zero effect, effect outside the
// equivalence margin, degenerate category distribution, ...).
// Maps to CLI exit code 3.
class NoFiniteSizeError : public std::runtime_error {
public:
    explicit NoFiniteSizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested size cannot be matched by any power in the invertible range.
// Maps to CLI exit code 3.
class PowerRangeError : public std::runtime_error {
public:
    explicit PowerRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace twoarm
