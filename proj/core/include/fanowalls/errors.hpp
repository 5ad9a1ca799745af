#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanowalls {

/// Base class for every error raised by the library. `kind()` returns the
/// stable error name that the CLI prints alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse-error", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace fanowalls
