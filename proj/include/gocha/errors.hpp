#ifndef GOCHA_ERRORS_HPP
#define GOCHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gocha {

// Input text could not be parsed. line/col are 1-based; col == 0 means
// "whole line", line == 0 means "no position available".
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string msg, int line = 0, int col = 0)
        : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

  private:
    static std::string format(const std::string& msg, int line, int col)
    {
        if (line == 0)
            return msg;
        std::string s = "line " + std::to_string(line);
        if (col > 0)
            s += ", col " + std::to_string(col);
        return s + ": " + msg;
    }
    int line_;
    int col_;
};

// A computation was refused because its estimated cost exceeds the
// configured budget. The message carries the estimate.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace gocha

#endif
