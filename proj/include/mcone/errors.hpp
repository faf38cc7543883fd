#pragma once

#include <stdexcept>
#include <string>

namespace mcone {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: type strings, matrices, configuration files.
class ConfigError : public Error {
public:
    using Error::Error;
};

// An enumeration or search budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed; results computed so far must not be trusted.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace mcone
