#pragma once

#include <cstdint>

namespace graphlearn {

/// Default ceiling of elementary checks per search. GRAPHLEARN_BUDGET
/// overrides it when set to a positive integer.
inline constexpr std::uint64_t kDefaultCeiling = 1'000'000'000ULL;
std::uint64_t default_ceiling();

enum class Execution { Serial, Parallel };

struct SearchOptions {
  Execution execution = Execution::Parallel;
  std::uint64_t ceiling = default_ceiling();
};

/// Counts elementary checks (one oracle comparison against a required label)
/// and throws BudgetExceeded once the count passes the ceiling.
class Meter {
 public:
  explicit Meter(std::uint64_t ceiling) : ceiling_(ceiling) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > ceiling_) exceeded();
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  [[noreturn]] void exceeded() const;

  std::uint64_t ceiling_;
  std::uint64_t used_ = 0;
};

}  // namespace graphlearn
