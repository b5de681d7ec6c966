#pragma once

#include <stdexcept>
#include <string>

namespace sliced {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Infeasible or malformed parameters (violated sizing inequality, bad range).
struct ParamError : Error {
    explicit ParamError(const std::string& what) : Error(what) {}
};

/// Decoding failed: the received word is not recoverable within the design distance.
struct DecodeError : Error {
    explicit DecodeError(const std::string& what) : Error(what) {}
};

/// File or stream problem (missing file, short read, malformed header).
struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace sliced
