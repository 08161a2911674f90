#include "monfact/budget.hpp"

#include <string>

#include "monfact/errors.hpp"

namespace monfact {

SearchBudget::SearchBudget(BudgetLimits limits)
    : limits_(limits), start_(std::chrono::steady_clock::now()) {}

double SearchBudget::elapsed_seconds() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

void SearchBudget::charge(std::uint64_t nodes) {
  if (exhausted_.load(std::memory_order_relaxed)) {
    throw SearchInconclusive("search budget exhausted");
  }
  const std::uint64_t before = nodes_.fetch_add(nodes, std::memory_order_relaxed);
  const std::uint64_t after = before + nodes;
  if (after > limits_.max_nodes) {
    exhausted_ = true;
    throw SearchInconclusive("node budget of " + std::to_string(limits_.max_nodes) +
                             " exhausted");
  }
  // Clock reads are comparatively expensive; sample every 4096 nodes.
  if ((before >> 12) != (after >> 12) && elapsed_seconds() > limits_.max_seconds) {
    exhausted_ = true;
    throw SearchInconclusive("wall-time budget of " + std::to_string(limits_.max_seconds) +
                             "s exhausted");
  }
}

void SearchBudget::charge_cached(std::uint64_t count) {
  if (cached_.fetch_add(count, std::memory_order_relaxed) + count > limits_.max_cached) {
    exhausted_ = true;
    throw SearchInconclusive("cache budget of " + std::to_string(limits_.max_cached) +
                             " stored divisors exhausted");
  }
}

}  // namespace monfact
