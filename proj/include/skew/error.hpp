#pragma once

#include <stdexcept>
#include <string>

namespace skew {

enum class ErrorCode {
  syntax,
  duplicate_monomial,
  missing_monomial,
  not_square_free,
  invalid_argument,
  budget_exceeded,
  precondition,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_parse_error() const noexcept {
    return code_ == ErrorCode::syntax || code_ == ErrorCode::duplicate_monomial ||
           code_ == ErrorCode::missing_monomial || code_ == ErrorCode::not_square_free;
  }

 private:
  ErrorCode code_;
};

}  // namespace skew
