#pragma once

#include <stdexcept>
#include <string>

namespace pcg {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text or JSON that does not follow its declared format.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on arguments that violate its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A witness and a graph disagree on their vertex labels.
class LabelMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace pcg
