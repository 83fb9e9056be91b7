#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fairalloc/fairness.hpp"
#include "fairalloc/simulate.hpp"
#include "fairalloc/types.hpp"

namespace fairalloc {

/// Online PROPa pointer algorithm for identical additive goods: each round
/// recomputes the constraint factor B_t and advances the cuts, which are
/// monotone nondecreasing forever.
class PropaPointerAllocator : public OnlineAllocator {
public:
  ContiguousAllocation step(const BigInt& item_value);
  Allocation on_item(const ValuationProfile& prefix) override;

  const std::vector<std::size_t>& cuts() const { return cuts_; }

private:
  std::vector<std::size_t> cuts_;
  std::vector<BigInt> prefix_sums_{0};
  BigInt vmax_ = 0;
  std::size_t t_ = 0;
  int n_ = 0;
};

/// Lumpy-tie split for two agents with an identical monotone valuation:
/// i = min{j >= 1 : v(M_j) >= v(M_{j,t})}; cut at i if v(M_{i-1}) <= v(M_{i,t}),
/// else at i-1.
ContiguousAllocation lumpy_tie_step(const IntervalValuationOracle& v, std::size_t t);

/// Two agents, identical valuations. Additive by default (values taken from
/// the arriving profile); construct with an oracle for general monotone
/// valuations spanning the whole stream.
class LumpyTieAllocator : public OnlineAllocator {
public:
  LumpyTieAllocator() = default;
  explicit LumpyTieAllocator(IntervalValuationOracle oracle) : oracle_(std::move(oracle)) {}

  Allocation on_item(const ValuationProfile& prefix) override;
  const ContiguousAllocation& last() const { return last_; }

private:
  std::optional<IntervalValuationOracle> oracle_;
  std::vector<BigInt> values_;
  ContiguousAllocation last_;
};

/// DP tables of the leximin^2 recurrence: f[i][j] is the cut tuple
/// (l_1..l_i, with l_i = j) of the best allocation of M_j among i agents,
/// h[i][j] its nondecreasing block-value tuple.
struct LeximinDpTables {
  std::vector<std::vector<std::vector<std::size_t>>> f;
  std::vector<std::vector<std::vector<BigInt>>> h;
};

struct Leximin2Result {
  ContiguousAllocation allocation;
  LeximinDpTables tables;
};

/// O(n^2 m^2) dynamic program for the contiguous leximin^2 allocation of
/// identical additive values.
Leximin2Result leximin2_dp(const std::vector<BigInt>& values, int n);

struct OfflineEf1Result {
  ContiguousAllocation allocation;
  ContiguousAllocation initial;  // the leximin^2 start
  int fixed_agent = 0;           // argmin block, lowest index
};

/// Leximin^2 start, then repair sweeps toward the fixed minimum agent until
/// no pair (fixed, j) violates EF1. on_move, when set, observes the cuts
/// after every single item move.
OfflineEf1Result offline_ef1(const std::vector<BigInt>& values, int n,
                             const std::function<void(const ContiguousAllocation&)>& on_move = {});

/// Recomputes offline_ef1 on M_t each round. Values must be strictly
/// positive; anything else is rejected with a bounded-values error.
class OnlineEf1Allocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override;

  const ContiguousAllocation& last() const { return last_; }
  /// The round's leximin^2 allocation X^t before the repair sweeps.
  const ContiguousAllocation& last_initial() const { return last_initial_; }
  /// Adjustments of the X^t -> A^t transform: sum_j |P_j(X)-P_j(A)|.
  long long last_transform_adjustments() const { return transform_adjustments_; }

private:
  std::vector<BigInt> values_;
  ContiguousAllocation last_, last_initial_;
  long long transform_adjustments_ = 0;
};

struct SplitterResult {
  ContiguousAllocation allocation;
  /// block_owner[b-1] = agent assigned to block b (assignment order, not
  /// necessarily the identity).
  std::vector<int> block_owner;

  Allocation to_allocation() const { return induce(allocation, block_owner); }
};

/// Left-to-right sweep assigning the current block to the lowest-index
/// active agent whose per-agent proportionality condition holds; leftover
/// items extend the final block. Additive goods, nonidentical allowed.
SplitterResult offline_propa_splitter(const ValuationProfile& v);

/// Rerun-per-round online wrappers over the offline algorithms.
class PropaSplitterRerunAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override {
    return offline_propa_splitter(prefix).to_allocation();
  }
};

class OfflineEf1RerunAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override;
};

class Leximin2RerunAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override;
};

/// Identical additive values of a profile, or throws Unsupported.
std::vector<BigInt> identical_values(const ValuationProfile& prefix, const char* who);

}  // namespace fairalloc
