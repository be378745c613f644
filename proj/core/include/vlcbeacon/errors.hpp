#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vlcb {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's preconditions (bad lengths, ranges, flags).
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// A line-coded frame contains a symbol group that no encoder can produce.
/// `group_index` is the index of the offending pair (Manchester) or 6-bit
/// group (4B6B) within the frame.
class LineCodeViolation : public Error {
public:
    LineCodeViolation(const std::string& what, std::size_t group_index)
        : Error(what), group_index(group_index) {}

    std::size_t group_index;
};

/// A text input (config, schedule, frozen-set file) could not be parsed.
/// The message always carries "<file>:<line>:".
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}

    std::string file;
    std::size_t line;
};

}  // namespace vlcb
