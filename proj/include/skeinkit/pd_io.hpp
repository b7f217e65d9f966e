#pragma once

#include <stdexcept>
#include <string>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Raised on malformed diagram text; line is 1-based within the parsed text.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Renders a diagram in arc-list form:
//
//   C: (1 2 3)(4 5 6)
//   X[1,5,2,4] +
//   X[3,1,4,6] +
//
// The C: header lists every component as a parenthesized arc cycle in
// orientation order; each X line gives one crossing's four arcs
// counterclockwise from the incoming under-strand, followed by its sign.
std::string to_pd_text(const Diagram& d);

// Inverse of to_pd_text. Accepts blank lines and '#' comments anywhere.
// The result is fully validated; parse_pd_text(to_pd_text(d)) reproduces d
// field for field.
Diagram parse_pd_text(const std::string& text);

}  // namespace skeinkit
