#pragma once

#include <cstdint>
#include <cstdlib>

#include "polywork/errors.hpp"

namespace polywork {

// Node budget for the exponential searches. The default can be overridden
// globally with the POLYWORK_BUDGET environment variable or per call.
struct Budget {
  std::uint64_t max_nodes = 0;  // 0 = use default_nodes()

  static std::uint64_t default_nodes() {
    static std::uint64_t cached = [] {
      if (const char* env = std::getenv("POLYWORK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::uint64_t>(v);
      }
      return std::uint64_t{1} << 22;
    }();
    return cached;
  }

  std::uint64_t nodes() const { return max_nodes ? max_nodes : default_nodes(); }
};

// Counts work units and throws once the cap is hit.
class BudgetMeter {
public:
  explicit BudgetMeter(Budget b = {}) : cap_(b.nodes()) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_) throw SearchBudgetExceeded("used " + std::to_string(used_) + " of " + std::to_string(cap_) + " nodes");
  }
  // Pre-flight check for table allocations of known size.
  void require(std::uint64_t n) const {
    if (n > cap_) throw SearchBudgetExceeded("needs " + std::to_string(n) + " nodes, cap " + std::to_string(cap_));
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

}  // namespace polywork
