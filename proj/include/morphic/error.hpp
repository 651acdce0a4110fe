#pragma once

#include <stdexcept>
#include <string>

namespace morphic {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (morphisms, words, formulas, constraint and manifest files).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Too few or too many letters for the supported digit alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its domain (letter out of range, non-prolongable morphism, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A node, step, length or time budget was exhausted before the computation finished.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// File could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace morphic
