#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eisen/eisenstein.hpp"

namespace eisen {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Minimal spelling: "7", "-2w", "486+243w", "1-w". A unit coefficient on w is elided.
std::string format_eisenstein(const EisensteinInt &x);

/// Accepts "<A>", "<B>w", "<A><sign><B>w" with optional whitespace around signs;
/// a missing B next to w means 1.
EisensteinInt parse_eisenstein(std::string_view s);

/// Non-negative decimal integer; throws ParseError otherwise.
Integer parse_natural(std::string_view s);

} // namespace eisen
