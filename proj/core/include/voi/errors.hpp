#pragma once

#include <stdexcept>
#include <string>

namespace voi {

/// Reason codes for input validation failures.
enum class errc {
  empty,
  negative_component,
  not_normalized,
  dimension_mismatch,
  domain_error,
  empty_instance,
  overflow_present,
  invalid_partition,
};

/// Base class for all voimetric errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or malformed input. Maps to CLI exit code 2.
class InvalidInput : public Error {
 public:
  InvalidInput(errc code, const std::string& what) : Error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// An exact solver's enumeration would exceed its size cap. Maps to CLI exit code 3.
class SizeCapExceeded : public Error {
 public:
  explicit SizeCapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace voi
