#pragma once

#include <cstdint>
#include <limits>

namespace hline {

/// Counts search nodes against a fixed limit. Searches call `spend()` once
/// per node and unwind when it returns false.
class WorkBudget {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

  explicit WorkBudget(std::uint64_t limit = kUnlimited) : limit_(limit) {}

  bool spend(std::uint64_t nodes = 1) noexcept {
    if (used_ >= limit_ || limit_ - used_ < nodes) {
      used_ = limit_;
      exhausted_ = true;
      return false;
    }
    used_ += nodes;
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t remaining() const noexcept { return limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

}  // namespace hline
