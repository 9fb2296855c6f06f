#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spikegraph {

// Base class for every error this library raises on purpose. Catching
// spikegraph::Error at the CLI boundary is enough to turn any engine
// failure into a clean message and a nonzero exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller handed us a value outside its documented domain (bad index,
// negative weight, lambda out of range, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Two containers that must agree in shape do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A text input (dataset file, checkpoint, split file) failed to parse.
// Carries the file path and 1-based line number for the message.
class ParseError : public Error {
public:
    ParseError(std::string path, std::size_t line, const std::string& detail)
        : Error(path + ":" + std::to_string(line) + ": " + detail),
          path_(std::move(path)),
          line_(line) {}

    const std::string& path() const noexcept { return path_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

} // namespace spikegraph
