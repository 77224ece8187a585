#pragma once

#include <stdexcept>
#include <string>

namespace newsclf {

// Error taxonomy mirrors the CLI exit codes: config 2, data 3, numeric 4, io 5.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CsvError : DataError {
    explicit CsvError(const std::string& msg) : DataError(msg) {}
};

struct LeakageError : std::logic_error {
    explicit LeakageError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace newsclf
