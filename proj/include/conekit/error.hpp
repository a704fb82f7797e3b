#pragma once

#include <stdexcept>
#include <string>

namespace conekit {

// Mirrors ck_status in conekit.h; values must stay in sync.
enum class ErrorCode {
  invalid_argument = 1,
  dimension_mismatch = 2,
  singular = 3,
  guard_exceeded = 4,
  precondition = 5,
  numeric = 6,
  parse = 7,
  io = 8,
  internal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conekit
