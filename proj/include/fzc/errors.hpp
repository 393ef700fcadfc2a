#pragma once

#include <stdexcept>
#include <string>

namespace fzc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (r > a, x = NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid Zernike index pair (|m| > n, wrong parity, n above the ceiling).
class IndexError : public Error {
 public:
  using Error::Error;
};

// Two operands disagree on a, kmax, N or lattice coverage.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A support precondition (mass outside a required disk) is violated.
class SupportError : public Error {
 public:
  using Error::Error;
};

// Malformed grid, coefficient or kernel file, or an I/O failure.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A kernel store was asked for a pair it neither holds nor may compute.
class MissingKernelError : public Error {
 public:
  using Error::Error;
};

// Invalid command-line configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fzc
