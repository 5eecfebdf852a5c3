#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcgroup {

// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated invariant or precondition: bad presentation, graph mismatch,
// torsion graph where a torsion-free one is required, ceiling exceeded, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed word or graph text. `position` is the index of the offending
// token within the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pcgroup
