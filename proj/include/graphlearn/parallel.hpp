#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#include "graphlearn/budget.hpp"
#include "graphlearn/types.hpp"

namespace graphlearn {

/// Runs branch(i, meter) for i in [0, branches) and returns the result of the
/// lowest-indexed branch that succeeds.
///
/// The outcome matches a serial scan with one cumulative meter exactly: the
/// first branch (in index order) that either succeeds or exhausts the budget
/// decides, and the summed cost of the branches up to it is held against the
/// ceiling. Branches past the best success found so far are skipped.
template <class R, class Branch>
std::optional<R> first_success(std::size_t branches, const SearchOptions& opts, Branch&& branch) {
  struct Slot {
    std::optional<R> result;
    std::uint64_t used = 0;
    bool exceeded = false;
    bool ran = false;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(branches);

  auto run = [&](std::size_t i) {
    Meter meter(opts.ceiling);
    Slot& s = slots[i];
    s.ran = true;
    try {
      s.result = branch(i, meter);
    } catch (const BudgetExceeded&) {
      s.exceeded = true;
    } catch (...) {
      s.error = std::current_exception();
    }
    s.used = meter.used();
  };

  if (opts.execution == Execution::Serial) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < branches; ++i) {
      run(i);
      total += slots[i].used;
      if (slots[i].result || slots[i].exceeded || slots[i].error || total > opts.ceiling) break;
    }
  } else {
    std::atomic<std::size_t> best{branches};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < branches; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      run(i);
      if (slots[i].result || slots[i].exceeded || slots[i].error) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  }

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < branches; ++i) {
    Slot& s = slots[i];
    if (!s.ran) break;
    if (s.error) std::rethrow_exception(s.error);
    total += s.used;
    if (s.exceeded || total > opts.ceiling)
      throw BudgetExceeded("search exceeded its budget of " + std::to_string(opts.ceiling) + " checks");
    if (s.result) return std::move(s.result);
  }
  return std::nullopt;
}

}  // namespace graphlearn
