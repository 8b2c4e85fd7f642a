#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subreg {

/// Malformed textual input (regex or word syntax). `position` is a 0-based
/// byte offset into the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A computation hit its configured cap. Raised instead of returning a
/// verdict from partial evidence.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace subreg
