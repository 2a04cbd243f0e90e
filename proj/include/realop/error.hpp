#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realop {

enum class ErrorCode {
  invalid_dimension,
  not_real_linear,
  dimension_mismatch,
  normalization,
  dim1_not_convex,
  empty_input,
  invalid_rect,
  precondition,
  parse,
  io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace realop
