#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input outside its admissible range. `field()` names the offending
// component, e.g. "r" or "s".
class RangeError : public Error {
 public:
  RangeError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusion
