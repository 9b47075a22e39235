#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liechain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family/degree pair outside the parse range (odd Sp, degree <= 0, ...).
class MalformedTypeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An argument outside an operation's domain (e.g. a torus passed where a
/// semisimple group is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

class TrivialGroupError : public Error {
 public:
  TrivialGroupError() : Error("the trivial group has no maximal connected subgroups") {}
};

/// Raised by the oracle when its search reaches a group whose maximal
/// subgroup list is not known to be complete.
class IncompleteDatabaseError : public Error {
 public:
  explicit IncompleteDatabaseError(std::string node)
      : Error("maximal subgroup enumeration incomplete at " + node), node_(std::move(node)) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

}  // namespace liechain
