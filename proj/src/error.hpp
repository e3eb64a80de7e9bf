#pragma once

#include <stdexcept>
#include <string>

namespace cutgroup {

// Numeric values are mirrored by cg_status in the C header.
enum class ErrorCode {
  invalid_argument = 1,
  degree_mismatch = 2,
  not_a_permutation = 3,
  cap_exceeded = 4,
  not_a_member = 5,
  not_normal = 6,
  no_dixon_prime = 7,
  splitting_failure = 8,
  lifting_failure = 9,
  overflow = 10,
  parse_error = 11,
  io_error = 12,
  internal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cutgroup
