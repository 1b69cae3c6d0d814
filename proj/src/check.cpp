#include "skew/check.hpp"

#include "skew/error.hpp"

namespace skew {

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::violated: return "violated";
    case CheckStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "verified") return CheckStatus::verified;
  if (s == "violated") return CheckStatus::violated;
  if (s == "budget_exhausted") return CheckStatus::budget_exhausted;
  throw Error(ErrorCode::invalid_argument, "unknown check status '" + s + "'");
}

}  // namespace skew
