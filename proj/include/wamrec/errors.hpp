#pragma once

#include <stdexcept>
#include <string>

namespace wamrec {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid geometry, solver settings, or config file contents.
class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A caller broke an interface contract (dimension mismatch etc).
class ContractError : public Error {
  public:
    explicit ContractError(const std::string& what) : Error(what) {}
};

/// Non-finite or out-of-domain value produced at run time.
class NumericError : public Error {
  public:
    explicit NumericError(const std::string& what) : Error(what) {}
};

/// File format or I/O failure.
class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace wamrec
