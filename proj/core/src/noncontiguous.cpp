#include "fairalloc/noncontiguous.hpp"

#include <algorithm>

namespace fairalloc {

namespace {

void require_goods(const ValuationProfile& prefix, const char* who) {
  std::size_t t = prefix.items();
  for (int i = 1; i <= prefix.agents(); ++i)
    if (prefix.value(i, t) < 0) throw Unsupported(std::string(who) + " requires goods");
}

}  // namespace

const std::vector<std::size_t>& EnvyBalancingAllocator::c_bundle(int agent) const {
  if (agent < 1 || agent > 2) throw ContractViolation("agent must be 1 or 2");
  return c_[agent - 1];
}

const std::vector<std::size_t>& EnvyBalancingAllocator::g_bundle(int agent) const {
  if (agent < 1 || agent > 2) throw ContractViolation("agent must be 1 or 2");
  return g_[agent - 1];
}

Allocation EnvyBalancingAllocator::on_item(const ValuationProfile& prefix) {
  if (prefix.agents() != 2) throw Unsupported("envy-balancing requires exactly 2 agents");
  std::size_t t = prefix.items();
  const BigInt& v1 = prefix.value(1, t);
  const BigInt& v2 = prefix.value(2, t);

  // Guards evaluated on C alone, as in the pseudocode.
  bool a1_unenvied = vc_[1][1] >= vc_[1][0];    // v_2(C_2) >= v_2(C_1)
  bool a1_not_envy = vc_[0][0] >= vc_[0][1];    // v_1(C_1) >= v_1(C_2)
  bool to_first = (a1_unenvied && v1 > 0) || (v1 > 0 && v2 <= 0) ||
                  (a1_not_envy && v1 <= 0 && v2 <= 0);
  int dst = to_first ? 0 : 1;
  c_[dst].push_back(t);
  vc_[0][dst] += v1;
  vc_[1][dst] += v2;
  owner_.push_back(dst + 1);

  bool a1_envies = vc_[0][0] < vc_[0][1];
  bool a2_envies = vc_[1][1] < vc_[1][0];
  if (a1_envies && a2_envies) {
    std::swap(c_[0], c_[1]);
    std::swap(vc_[0][0], vc_[0][1]);
    std::swap(vc_[1][0], vc_[1][1]);
    for (std::size_t g : c_[0]) owner_[g - 1] = 1;
    for (std::size_t g : c_[1]) owner_[g - 1] = 2;
  }

  bool c_is_ef = vc_[0][0] >= vc_[0][1] && vc_[1][1] >= vc_[1][0];
  if (c_is_ef) {
    for (int b = 0; b < 2; ++b) {
      g_[b].insert(g_[b].end(), c_[b].begin(), c_[b].end());
      c_[b].clear();
      vc_[0][b] = 0;
      vc_[1][b] = 0;
    }
  }
  return Allocation{owner_};
}

Allocation GreedyRestrictedAllocator::on_item(const ValuationProfile& prefix) {
  const int n = prefix.agents();
  if (bundle_value_.empty()) bundle_value_.assign(static_cast<std::size_t>(n), BigInt(0));
  std::size_t t = prefix.items();
  // Restricted additive: all nonzero values of an item must agree.
  std::optional<BigInt> inherent;
  for (int i = 1; i <= n; ++i) {
    const BigInt& v = prefix.value(i, t);
    if (v != 0) {
      if (inherent && v != *inherent)
        throw Unsupported("greedy-restricted requires restricted additive valuations");
      inherent = v;
    }
  }
  bool chores = mode_ == GreedyMode::Chores;
  if (inherent && ((chores && *inherent > 0) || (!chores && *inherent < 0)))
    throw Unsupported(chores ? "chores mode requires nonpositive values"
                             : "greedy-restricted requires goods");

  auto prefer = [&](int cand, int best) {
    const BigInt& c = bundle_value_[static_cast<std::size_t>(cand) - 1];
    const BigInt& b = bundle_value_[static_cast<std::size_t>(best) - 1];
    return chores ? c > b : c < b;
  };
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    bool interested = chores ? prefix.value(i, t) < 0 : prefix.value(i, t) > 0;
    if (interested && (k == 0 || prefer(i, k))) k = i;
  }
  if (k == 0) {  // all agents indifferent: globally extreme bundle, lowest index
    k = 1;
    for (int i = 2; i <= n; ++i)
      if (prefer(i, k)) k = i;
  }
  bundle_value_[static_cast<std::size_t>(k) - 1] += prefix.value(k, t);
  owner_.push_back(k);
  return Allocation{owner_};
}

Allocation GreedyIdenticalAllocator::on_item(const ValuationProfile& prefix) {
  const int n = prefix.agents();
  std::size_t t = prefix.items();
  if (bundle_value_.empty()) {
    bundle_value_.assign(static_cast<std::size_t>(n), BigInt(0));
    bundles_.assign(static_cast<std::size_t>(n), {});
  }
  if (!set_value_) {
    for (int i = 2; i <= n; ++i)
      if (prefix.value(i, t) != prefix.value(1, t))
        throw Unsupported("greedy-identical requires identical valuations");
  }
  bool chores = mode_ == GreedyMode::Chores;
  int k = 1;
  for (int i = 2; i <= n; ++i) {
    const BigInt& c = bundle_value_[static_cast<std::size_t>(i) - 1];
    const BigInt& b = bundle_value_[static_cast<std::size_t>(k) - 1];
    if (chores ? c > b : c < b) k = i;
  }
  bundles_[static_cast<std::size_t>(k) - 1].push_back(t);
  if (set_value_)
    bundle_value_[static_cast<std::size_t>(k) - 1] = set_value_(bundles_[static_cast<std::size_t>(k) - 1]);
  else
    bundle_value_[static_cast<std::size_t>(k) - 1] += prefix.value(1, t);
  owner_.push_back(k);
  return Allocation{owner_};
}

Allocation LayerUpdatingAllocator::on_item(const ValuationProfile& prefix) {
  require_goods(prefix, "layer-updating");
  const int n = prefix.agents();
  std::size_t t = prefix.items();
  std::size_t k = (t + static_cast<std::size_t>(n) - 1) / static_cast<std::size_t>(n);
  while (layers_.size() < k) layers_.emplace_back(static_cast<std::size_t>(n), 0);

  auto slot_value = [&](int agent, std::size_t item) -> BigInt {
    return item == 0 ? BigInt(0) : prefix.value(agent, item);  // v_i(0) = 0
  };

  owner_.resize(t, 0);
  std::size_t x = t;  // the carried item
  for (std::size_t layer = 0; layer + 1 < k; ++layer) {
    for (;;) {
      // G = agents preferring the carried item to their slot item; pick the
      // one whose slot item they value least (smallest item index on ties).
      // The minimum-value choice is what makes a layer settle after a single
      // swap under identical valuations.
      int chosen = 0;
      for (int a = 1; a <= n; ++a) {
        std::size_t slot = layers_[layer][static_cast<std::size_t>(a) - 1];
        if (prefix.value(a, x) > slot_value(a, slot)) {
          if (chosen == 0) {
            chosen = a;
            continue;
          }
          std::size_t cslot = layers_[layer][static_cast<std::size_t>(chosen) - 1];
          const BigInt av = slot_value(a, slot);
          const BigInt cv = slot_value(chosen, cslot);
          if (av < cv || (av == cv && slot < cslot)) chosen = a;
        }
      }
      if (chosen == 0) break;
      std::swap(x, layers_[layer][static_cast<std::size_t>(chosen) - 1]);
      owner_[layers_[layer][static_cast<std::size_t>(chosen) - 1] - 1] = chosen;
    }
  }
  std::size_t last_slot = t - static_cast<std::size_t>(n) * (k - 1);  // 1-based; slot index = agent
  layers_[k - 1][last_slot - 1] = x;
  owner_[x - 1] = static_cast<int>(last_slot);
  return Allocation{owner_};
}

RoundRobinResult round_robin(const ValuationProfile& v) {
  const int n = v.agents();
  std::size_t m = v.items();
  for (int i = 1; i <= n; ++i)
    for (std::size_t g = 1; g <= m; ++g)
      if (v.value(i, g) < 0) throw Unsupported("round-robin requires goods");

  std::vector<bool> taken(m + 1, false);
  RoundRobinResult out;
  out.allocation.owner.assign(m, 0);
  std::size_t assigned = 0;
  while (assigned < m) {
    std::vector<std::size_t> row(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n && assigned < m; ++i) {
      std::size_t best = 0;
      for (std::size_t g = 1; g <= m; ++g) {
        if (taken[g]) continue;
        if (best == 0 || v.value(i, g) > v.value(i, best)) best = g;
      }
      if (best == 0) break;
      taken[best] = true;
      row[static_cast<std::size_t>(i) - 1] = best;
      out.allocation.owner[best - 1] = i;
      ++assigned;
    }
    out.picks.push_back(std::move(row));
  }
  return out;
}

}  // namespace fairalloc
