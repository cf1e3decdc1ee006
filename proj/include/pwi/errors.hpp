#pragma once

#include <stdexcept>
#include <string>

namespace pwi {

// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input file violates its declared format beyond per-line recovery.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user configuration, e.g. a cyclic merge map.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pwi
