#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skew {

// Bounded verification is three-valued: a sweep that found nothing to check
// or ran out of budget is not a verification.
enum class CheckStatus { verified, violated, budget_exhausted };

const char* to_string(CheckStatus status) noexcept;
CheckStatus check_status_from_string(const std::string& s);

inline constexpr std::size_t max_recorded_violations = 16;

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::budget_exhausted;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first few, human readable
  std::string note;

  void violation(std::string what) {
    ++violation_count;
    if (violations.size() < max_recorded_violations) violations.push_back(std::move(what));
  }
  // Sets `status` from the counters.
  void finish(bool budget_hit = false) {
    if (violation_count > 0) {
      status = CheckStatus::violated;
    } else if (budget_hit || checked == 0) {
      status = CheckStatus::budget_exhausted;
    } else {
      status = CheckStatus::verified;
    }
  }
  bool ok() const { return status == CheckStatus::verified; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace skew
