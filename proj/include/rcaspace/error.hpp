#ifndef RCASPACE_ERROR_HPP
#define RCASPACE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rcaspace {

/// Broad failure category; the CLI maps each one to an exit code.
enum class ErrorKind { io, data, usage };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// File missing, unreadable, or unwritable.
class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

/// Input content violates a data contract (parse errors, negative values, empty production).
class DataError : public Error {
public:
  explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

/// A caller asked for something that does not exist (unknown format, mode, rule).
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

} // namespace rcaspace

#endif
