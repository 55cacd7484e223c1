#pragma once

#include <stdexcept>
#include <string>

namespace enclose {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pursuer sits on top of the target; the line of sight is undefined.
class CoincidentWithTarget : public Error {
 public:
  using Error::Error;
};

/// The combined potential has no stationary point at a positive offset.
class NoPositiveRoot : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite state.
class NumericalBlowup : public Error {
 public:
  NumericalBlowup(double time, const std::string& what)
      : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Malformed scenario document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed scenario whose values violate an invariant. The message
/// names the offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace enclose
