#pragma once

#include <stdexcept>
#include <string>

namespace glotto {

/// Bad user input: malformed files, out-of-range values, missing config.
/// The CLI maps these to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse failure in a line-oriented file; carries the 1-based line number.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, std::size_t line)
        : input_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Numerical failure (solver non-convergence, degenerate matrix).
/// The CLI maps these to exit code 1.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace glotto
