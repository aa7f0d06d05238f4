#pragma once

#include <stdexcept>
#include <string>

namespace psokit {

/// Invalid user-supplied configuration (bad bounds, bad variant combination, ...).
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an API precondition (size mismatch, guard exceeded, ...).
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Non-finite value showed up where the math requires a finite one.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config text could not be parsed; carries the 1-based offending line.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

} // namespace psokit
