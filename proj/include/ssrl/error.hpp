#pragma once

#include <stdexcept>
#include <string>

namespace ssrl {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorKind : int {
  Config = 2,
  Data = 3,
  Numerical = 4,
  Precondition = 5,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class DataError : public Error {
public:
  explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class NumericalError : public Error {
public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

// Violated operation precondition (bad argument, size mismatch, ...).
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

}  // namespace ssrl
