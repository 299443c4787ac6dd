#pragma once

#include <stdexcept>
#include <string>

namespace tstruct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (poset, filtration, morphism, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownPointError : public ValidationError {
 public:
  explicit UnknownPointError(const std::string& id)
      : ValidationError("unknown point '" + id + "'"), id_(id) {}
  UnknownPointError(const std::string& id, const std::string& message) : ValidationError(message), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Input could not be read or does not have the expected shape.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because of a configured size bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A Hom-dimension outside the closed-form table was requested.
class OutOfTableError : public Error {
 public:
  using Error::Error;
};

}  // namespace tstruct
