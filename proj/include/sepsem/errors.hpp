#pragma once

#include <stdexcept>
#include <string>

namespace sepsem {

/// Ill-formed input: bad endpoints, malformed groupings, violated preconditions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the documented budget (e.g. too many cells
/// under a separating conjunction).  Reported, never silently truncated.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in the proposition DSL, with 1-based position info.
struct parse_error : std::runtime_error {
    parse_error(int line, int col, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}

    int line;
    int col;
};

} // namespace sepsem
