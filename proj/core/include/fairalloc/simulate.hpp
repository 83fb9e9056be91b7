#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairalloc/fairness.hpp"
#include "fairalloc/types.hpp"

namespace fairalloc {

/// One item arrives per call; prefix holds all items that have arrived
/// (the last column is the new item g_t). The returned allocation must
/// cover exactly the prefix.
class OnlineAllocator {
public:
  virtual ~OnlineAllocator() = default;
  virtual Allocation on_item(const ValuationProfile& prefix) = 0;
};

struct RoundRecord {
  Allocation allocation;
  long long adjustments = 0;
  std::map<Notion, FairnessReport> verdicts;
};

struct RunResult {
  std::vector<RoundRecord> rounds;
  AdjustmentLedger ledger;
  /// Set when strict mode aborted the run: the first violating round.
  std::optional<std::size_t> first_violation;
};

/// Feeds the instance one item at a time, records every returned
/// allocation, computes the ledger, and evaluates each requested notion on
/// M_t. In strict mode the run stops after the first violating round.
RunResult run_online(OnlineAllocator& allocator, const ValuationProfile& instance,
                     const std::set<Notion>& checks = {}, bool strict = false);

/// Allocators registered by name for CLI selection.
std::vector<std::string> allocator_names();
/// Throws ContractViolation for unknown names. The allocator validates its
/// valuation-class preconditions as items arrive.
std::unique_ptr<OnlineAllocator> make_allocator(const std::string& name);

}  // namespace fairalloc
