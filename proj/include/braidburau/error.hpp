#pragma once

#include <stdexcept>
#include <string>

namespace braidburau {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class MixedGroupError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a word or coefficient grows past the desk-scale caps.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A specialization hit a pivot that vanishes (e.g. t = 1).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Signals a broken internal invariant; reaching one is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidburau
