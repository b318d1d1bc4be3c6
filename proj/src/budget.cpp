#include "graphlearn/budget.hpp"

#include <cstdlib>
#include <string>

#include "graphlearn/types.hpp"

namespace graphlearn {

std::uint64_t default_ceiling() {
  if (const char* env = std::getenv("GRAPHLEARN_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultCeiling;
}

void Meter::exceeded() const {
  throw BudgetExceeded("search exceeded its budget of " + std::to_string(ceiling_) + " checks");
}

}  // namespace graphlearn
