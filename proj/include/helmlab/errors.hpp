#pragma once

#include <stdexcept>
#include <string>

namespace helmlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

class RankDeficientError : public Error {
public:
  using Error::Error;
};

class GeometryError : public Error {
public:
  using Error::Error;
};

class ResolutionError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class PartitionError : public Error {
public:
  using Error::Error;
};

class DeflationSetupError : public Error {
public:
  using Error::Error;
};

class HRUndefined : public Error {
public:
  using Error::Error;
};

class PoleError : public Error {
public:
  using Error::Error;
};

class BoundUnavailable : public Error {
public:
  using Error::Error;
};

class SizeError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IOError : public Error {
public:
  using Error::Error;
};

}  // namespace helmlab
