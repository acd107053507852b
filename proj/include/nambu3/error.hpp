#pragma once

#include <stdexcept>
#include <string>

namespace nambu3 {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class ArityError : public Error {
public:
  using Error::Error;
};

class HomogeneityError : public Error {
public:
  using Error::Error;
};

class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Exact arithmetic left the range of the 64-bit component type.
class OverflowError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

/// Output destination could not be written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Malformed or semantically invalid input file.
class InputError : public Error {
public:
  using Error::Error;
};

}  // namespace nambu3
