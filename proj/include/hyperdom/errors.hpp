#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperdom {

// Malformed input data (bad edge-list line, empty graph, ...).
struct ParseError : std::runtime_error {
    std::size_t line = 0;
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid user-facing parameter (ratio <= 1, cache capacity < 7, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Refusal to allocate a structure above the configured budget.
struct MemoryBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyperdom
