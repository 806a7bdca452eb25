#pragma once

#include <stdexcept>
#include <string>

namespace isingotto {

// Base for every failure raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the physical domain (g <= 0, T <= 0, bad sizes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// d(omega)/dh requested where omega(theta) = 0 (h = g, theta = 0).
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// Magnetization has no interior maximum (h >= g for the exact model).
class NoPeak : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

// Exact diagonalization above the supported Hilbert-space size.
class DimensionCap : public Error {
 public:
  using Error::Error;
};

// Malformed sweep config (unknown key, wrong type, bad axis). The CLI treats it
// as a usage error (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace isingotto
