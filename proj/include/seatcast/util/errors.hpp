#ifndef SEATCAST_UTIL_ERRORS_HPP
#define SEATCAST_UTIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seatcast {

// Config problems abort a run with exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input-data problems abort a run with exit code 3.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seatcast

#endif
