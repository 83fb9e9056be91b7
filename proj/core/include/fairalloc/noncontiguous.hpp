#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "fairalloc/simulate.hpp"
#include "fairalloc/types.hpp"

namespace fairalloc {

/// Goods algorithms switch argmin for argmax to handle chores.
enum class GreedyMode { Goods, Chores };

/// Two agents, mixed manna. Maintains an EF part G and an EF1 part C;
/// the returned allocation is their union.
class EnvyBalancingAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override;

  const std::vector<std::size_t>& c_bundle(int agent) const;
  const std::vector<std::size_t>& g_bundle(int agent) const;

private:
  std::vector<std::size_t> c_[2], g_[2];
  // Running sums v_a(C_b), indexed [valuer][bundle].
  BigInt vc_[2][2] = {{0, 0}, {0, 0}};
  std::vector<int> owner_;
};

/// Restricted additive goods: g_t joins the minimum-own-value agent among
/// those with positive value for it (max for chores mode); all-indifferent
/// items go to the globally minimum agent. Never moves a prior item.
class GreedyRestrictedAllocator : public OnlineAllocator {
public:
  explicit GreedyRestrictedAllocator(GreedyMode mode = GreedyMode::Goods) : mode_(mode) {}
  Allocation on_item(const ValuationProfile& prefix) override;

private:
  GreedyMode mode_;
  std::vector<BigInt> bundle_value_;
  std::vector<int> owner_;
};

/// Identical valuations, additive or via a monotone set-value callback:
/// g_t joins argmin_i v(A_i), lowest index on ties.
class GreedyIdenticalAllocator : public OnlineAllocator {
public:
  using SetValueFn = std::function<BigInt(const std::vector<std::size_t>&)>;

  explicit GreedyIdenticalAllocator(GreedyMode mode = GreedyMode::Goods) : mode_(mode) {}
  /// General identical valuations: bundle values come from the callback.
  GreedyIdenticalAllocator(SetValueFn set_value, GreedyMode mode = GreedyMode::Goods)
      : mode_(mode), set_value_(std::move(set_value)) {}

  Allocation on_item(const ValuationProfile& prefix) override;

private:
  GreedyMode mode_;
  SetValueFn set_value_;
  std::vector<BigInt> bundle_value_;
  std::vector<std::vector<std::size_t>> bundles_;
  std::vector<int> owner_;
};

/// Additive goods, any n: keeps a round-robin-like layer table C^k with one
/// slot per agent (0 = sentinel of value 0) and threads each new item down
/// through the layers by swaps.
class LayerUpdatingAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override;

  /// layers()[k-1][a-1] is the item index in slot (k, a), 0 when empty.
  const std::vector<std::vector<std::size_t>>& layers() const { return layers_; }

private:
  std::vector<std::vector<std::size_t>> layers_;
  std::vector<int> owner_;
};

struct RoundRobinResult {
  Allocation allocation;
  /// picks[j-1][i-1] = item picked by agent i in round j, 0 when agent i
  /// got nothing in the final round.
  std::vector<std::vector<std::size_t>> picks;
};

/// Agents 1..n pick their maximum-value remaining item alternately, ties
/// broken by smallest item index.
RoundRobinResult round_robin(const ValuationProfile& v);

/// Online wrapper that reruns round_robin on every prefix.
class RoundRobinRerunAllocator : public OnlineAllocator {
public:
  Allocation on_item(const ValuationProfile& prefix) override { return round_robin(prefix).allocation; }
};

}  // namespace fairalloc
