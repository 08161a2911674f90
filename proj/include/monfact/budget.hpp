#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace monfact {

struct BudgetLimits {
  std::uint64_t max_nodes = 500'000'000;
  double max_seconds = 900.0;
  unsigned parallelism = 1;
  std::uint64_t max_cached = 2'000'000;  // memoized divisors kept at once
};

/// Shared node/time counter for one search run. Thread-safe; once exhausted it
/// stays exhausted and every further charge() throws SearchInconclusive.
class SearchBudget {
 public:
  explicit SearchBudget(BudgetLimits limits = {});

  void charge(std::uint64_t nodes = 1);
  /// Accounts for memoized elements; throws SearchInconclusive past max_cached.
  void charge_cached(std::uint64_t count = 1);
  std::uint64_t nodes_used() const { return nodes_.load(std::memory_order_relaxed); }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  double elapsed_seconds() const;
  const BudgetLimits& limits() const { return limits_; }

 private:
  BudgetLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> cached_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace monfact
