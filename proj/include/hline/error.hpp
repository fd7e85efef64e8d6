#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hline {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters: family ranges, n < 4, edges not in the graph, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (vertex count, edge count, work budget) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Reading or writing files (the cache).
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hline
