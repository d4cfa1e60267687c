#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathseq {

// Malformed textual input (graph6, edge list, sequence text). `offset` is the
// byte offset (or line number, for line-oriented formats) of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Input is structurally fine but exceeds a documented size guard.
class UnsupportedSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A family-parameter or type invariant is violated; the message names it.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace pathseq
