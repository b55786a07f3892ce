#pragma once

#include <stdexcept>
#include <string>

namespace crmcast {

// Raised for invalid parameter values, malformed configs, and inconsistent
// sweep specifications. Messages name the offending key.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crmcast
