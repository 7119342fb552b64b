#pragma once

#include <stdexcept>
#include <string>

namespace debunk {

// Base for every error raised by the library. Callers that only care about
// "the pipeline refused this input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace debunk
