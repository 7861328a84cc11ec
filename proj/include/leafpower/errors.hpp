#pragma once

#include <stdexcept>
#include <string>

namespace leafpower {

// Malformed input text; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A structural fact asserted by a construction did not hold at runtime.
class structure_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace leafpower
