#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyexp {

// Domain errors: invalid inputs, broken preconditions, singular systems.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the text parsers. Carries the byte offset of the offending
// token and a one-line remediation hint.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t offset, const std::string& hint = "")
        : Error(render(msg, offset, hint)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    static std::string render(const std::string& msg, std::size_t offset, const std::string& hint) {
        std::string out = msg + " (at byte " + std::to_string(offset) + ")";
        if (!hint.empty())
            out += "\n  hint: " + hint;
        return out;
    }

    std::size_t offset_;
};

}  // namespace polyexp
