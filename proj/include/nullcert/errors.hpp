#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nullcert {

// Malformed input: graph files, JSON documents, command arguments.
// The CLI maps these to exit code 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Violated operation precondition: mismatched variable tables, missing
// point assignments, indices out of range, length mismatches.
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An oracle or solver refused an instance exceeding a configured guard
// (vertex/edge limits, matrix column cap). The CLI maps these to exit code 3.
class guard_refusal : public std::runtime_error {
public:
    explicit guard_refusal(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nullcert
