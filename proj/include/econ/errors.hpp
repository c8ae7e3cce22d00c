#pragma once

#include <stdexcept>
#include <string>

namespace econ {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input too short / empty for the requested operation.
class DegenerateInput : public Error {
public:
  using Error::Error;
};

// Value outside the mathematical domain (non-positive level, non-finite entry).
class DomainError : public Error {
public:
  using Error::Error;
};

// Series do not share the year range the operation requires.
class AlignmentError : public Error {
public:
  using Error::Error;
};

// Recursive population update produced a non-positive bracket factor.
class ModelBreakdown : public Error {
public:
  using Error::Error;
};

// Parameter search could not locate a zero-mean solution.
class CalibrationError : public Error {
public:
  using Error::Error;
};

// Design matrix is rank deficient (or a regression degenerated to zero variance).
class SingularDesign : public Error {
public:
  using Error::Error;
};

// Product-moment matrix in a multivariate procedure is singular.
class SingularSystem : public Error {
public:
  using Error::Error;
};

// Unsupported test / trend / level combination.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

// CSV ingestion failure (gap, duplicate, non-numeric cell, missing column).
class IngestError : public Error {
public:
  using Error::Error;
};

// Configuration file invalid or inconsistent.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Output directory or file not writable.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace econ
