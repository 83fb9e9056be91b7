#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "fairalloc/errors.hpp"

namespace fairalloc {

/// Exact integer arithmetic everywhere. The adversarial instances use item
/// values of n^(2c), which overflow 64-bit integers within a few periods.
using BigInt = boost::multiprecision::cpp_int;

/// Structural classes of a valuation profile. A set flag is a promise that
/// is enforced by ValuationProfile::validate().
struct ClassFlags {
  bool identical = false;
  bool binary = false;
  bool restricted_additive = false;
  bool goods_only = false;
  bool chores_only = false;
};

/// Additive per-agent item values. Agents are 1-indexed, items are 1-indexed
/// by arrival order. v_i(S) is the sum of v_i(g) over g in S.
class ValuationProfile {
public:
  ValuationProfile() = default;
  ValuationProfile(std::vector<std::vector<BigInt>> values, ClassFlags flags = {});

  int agents() const { return static_cast<int>(values_.size()); }
  std::size_t items() const { return values_.empty() ? 0 : values_[0].size(); }
  const ClassFlags& flags() const { return flags_; }

  const BigInt& value(int agent, std::size_t item) const;
  BigInt bundle_value(int agent, const std::vector<std::size_t>& bundle) const;
  /// v_i(M_{l,r}) = sum of values of items l+1..r.
  BigInt interval_value(int agent, std::size_t l, std::size_t r) const;
  BigInt agent_total(int agent) const;
  /// v_i^max(M): maximum single-item value of one agent (0 if no items).
  BigInt agent_max(int agent) const;
  /// v^max: global maximum single-item value over all agents and items.
  BigInt max_item_value() const;

  /// Restriction to the first t items.
  ValuationProfile prefix(std::size_t t) const;
  /// Streaming append of one arrived item (one value per agent).
  void append_item(const std::vector<BigInt>& per_agent);

  /// Throws ContractViolation if shapes or declared class flags are violated.
  void validate() const;
  /// Computes the flags actually satisfied by the stored values.
  static ClassFlags detect_flags(const std::vector<std::vector<BigInt>>& values);

private:
  std::vector<std::vector<BigInt>> values_;
  ClassFlags flags_;
};

/// Monotone identical valuation exposed through contiguous intervals only:
/// the callback maps (l, r] with 0 <= l <= r to an exact value.
class IntervalValuationOracle {
public:
  using Fn = std::function<BigInt(std::size_t l, std::size_t r)>;
  explicit IntervalValuationOracle(Fn fn) : fn_(std::move(fn)) {}

  BigInt operator()(std::size_t l, std::size_t r) const {
    if (l > r) throw ContractViolation("interval oracle: l > r");
    if (l == r) return 0;
    return fn_(l, r);
  }

  /// Additive adapter built from per-item values via prefix sums.
  static IntervalValuationOracle additive(std::vector<BigInt> item_values);

private:
  Fn fn_;
};

/// Noncontiguous assignment: owner[j-1] is the agent holding item g_j.
struct Allocation {
  std::vector<int> owner;

  std::size_t items() const { return owner.size(); }
  std::vector<std::vector<std::size_t>> bundles(int n) const;
  void validate(int n) const;

  bool operator==(const Allocation&) const = default;
};

/// Contiguous allocation over items 1..horizon for cuts.size()+1 agents:
/// agent i holds the block M_{p_{i-1}, p_i} with p_0 = 0 and p_n = horizon.
struct ContiguousAllocation {
  std::vector<std::size_t> cuts;
  std::size_t horizon = 0;

  int agents() const { return static_cast<int>(cuts.size()) + 1; }
  void validate() const;

  bool operator==(const ContiguousAllocation&) const = default;
};

/// owner[j] = i where p_{i-1} < j <= p_i.
Allocation induce(const ContiguousAllocation& ca);
/// Same, but block b goes to block_owner[b-1] instead of agent b.
Allocation induce(const ContiguousAllocation& ca, const std::vector<int>& block_owner);

/// Per-round and cumulative counts of items that changed owner.
struct AdjustmentLedger {
  std::vector<long long> per_round;
  long long cumulative = 0;

  void record(long long count);
};

/// Number of items in M_{t-1} owned by different agents in prev and next.
/// next must cover exactly one more item than prev; g_t never counts.
long long count_adjustments(const Allocation& prev, const Allocation& next);
long long count_adjustments(const ContiguousAllocation& prev, const ContiguousAllocation& next);

}  // namespace fairalloc
