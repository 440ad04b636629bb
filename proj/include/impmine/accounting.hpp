#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace impmine {

/// Deterministic logical-unit allocation tracker. One unit is one index word.
/// The pipelines charge it at the implication-store and accumulator sites and
/// the reverse-search engine charges its per-level working set, so the peak is
/// a portable, allocator-independent stand-in for heap profiling.
class MemoryAccountant {
 public:
  void charge(std::uint64_t units) {
    current_ += units;
    peak_ = std::max(peak_, current_);
  }
  void release(std::uint64_t units) {
    assert(units <= current_);
    current_ -= units;
  }

  std::uint64_t current() const { return current_; }
  std::uint64_t peak() const { return peak_; }

 private:
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
};

/// Charges on construction, releases on destruction.
class ScopedCharge {
 public:
  ScopedCharge(MemoryAccountant* acc, std::uint64_t units)
      : acc_(acc), units_(units) {
    if (acc_) acc_->charge(units_);
  }
  ~ScopedCharge() {
    if (acc_) acc_->release(units_);
  }
  ScopedCharge(const ScopedCharge&) = delete;
  ScopedCharge& operator=(const ScopedCharge&) = delete;

 private:
  MemoryAccountant* acc_;
  std::uint64_t units_;
};

}  // namespace impmine
