#include "fairalloc/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fairalloc {

BigInt contiguous_allocation_count(int n, std::size_t t) {
  // C(t + n - 1, n - 1)
  BigInt num = 1;
  for (int i = 1; i <= n - 1; ++i) {
    num *= BigInt(t) + i;
    num /= i;
  }
  return num;
}

void enumerate_contiguous(int n, std::size_t t, long long budget,
                          const std::function<void(const ContiguousAllocation&)>& visit) {
  if (n < 1) throw ContractViolation("need at least one agent");
  BigInt count = contiguous_allocation_count(n, t);
  if (count > budget)
    throw BudgetExceeded("contiguous enumeration over budget", count.str());
  ContiguousAllocation ca;
  ca.horizon = t;
  ca.cuts.assign(static_cast<std::size_t>(n) - 1, 0);
  if (n == 1) {
    visit(ca);
    return;
  }
  for (;;) {
    visit(ca);
    // Advance the rightmost cut that can still move, reset the tail to it.
    std::size_t i = ca.cuts.size();
    while (i > 0 && ca.cuts[i - 1] == t) --i;
    if (i == 0) break;
    ++ca.cuts[i - 1];
    for (std::size_t j = i; j < ca.cuts.size(); ++j) ca.cuts[j] = ca.cuts[i - 1];
  }
}

std::vector<ContiguousAllocation> enumerate_contiguous(int n, std::size_t t, long long budget) {
  std::vector<ContiguousAllocation> out;
  enumerate_contiguous(n, t, budget, [&](const ContiguousAllocation& ca) { out.push_back(ca); });
  return out;
}

ContiguousAllocation brute_leximin2(const std::vector<BigInt>& values, int n, long long budget) {
  std::vector<BigInt> S{0};
  for (const auto& v : values) S.push_back(S.back() + v);
  std::optional<ContiguousAllocation> best;
  std::optional<SortedValueTuple> best_key;
  enumerate_contiguous(n, values.size(), budget, [&](const ContiguousAllocation& ca) {
    SortedValueTuple key = sorted_value_tuple(ca, S);
    if (!best || compare_leximin2(key, *best_key) == Ordering::Better) {
      best = ca;
      best_key = std::move(key);
    }
  });
  return *best;
}

namespace {

// Visits every valid allocation of the instance under the notion,
// optionally over all block-to-agent permutations.
void for_each_valid(const ValuationProfile& v, Notion notion, bool fixed_agent_order,
                    long long budget, const std::function<void(const Allocation&)>& visit) {
  const int n = v.agents();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  BigInt perms = 1;
  if (!fixed_agent_order)
    for (int i = 2; i <= n; ++i) perms *= i;
  BigInt total = contiguous_allocation_count(n, v.items()) * perms;
  if (total > budget) throw BudgetExceeded("valid-allocation enumeration over budget", total.str());

  enumerate_contiguous(n, v.items(), budget, [&](const ContiguousAllocation& ca) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      Allocation a = induce(ca, p);
      if (check(notion, a, v).satisfied) visit(a);
      if (fixed_agent_order) break;
    } while (std::next_permutation(p.begin(), p.end()));
  });
}

}  // namespace

ForcedOwnershipCertificate certify_forced_block(const ValuationProfile& v_prefix, Notion notion,
                                                std::size_t prefix_len, bool fixed_agent_order,
                                                long long budget) {
  if (prefix_len < 1 || prefix_len > v_prefix.items())
    throw ContractViolation("prefix_len out of range");
  ForcedOwnershipCertificate cert;
  cert.round = v_prefix.items();
  cert.prefix_len = prefix_len;
  cert.notion = notion;
  for_each_valid(v_prefix, notion, fixed_agent_order, budget, [&](const Allocation& a) {
    ++cert.valid_count;
    int first = a.owner[0];
    bool uniform = true;
    for (std::size_t j = 1; j < prefix_len; ++j)
      if (a.owner[j] != first) uniform = false;
    if (uniform)
      cert.owners.insert(first);
    else
      cert.split_seen = true;
  });
  return cert;
}

MinAdjustmentResult min_adjustment_schedule(const ValuationProfile& v, Notion notion,
                                            bool contiguous, bool fixed_agent_order,
                                            long long budget) {
  const std::size_t T = v.items();
  const int n = v.agents();
  MinAdjustmentResult out;

  // layer[t-1]: deduplicated valid owner vectors of M_t.
  std::vector<std::vector<Allocation>> layers;
  long long node_total = 0;
  for (std::size_t t = 1; t <= T; ++t) {
    ValuationProfile pre = v.prefix(t);
    std::map<std::vector<int>, bool> seen;
    std::vector<Allocation> nodes;
    if (contiguous) {
      for_each_valid(pre, notion, fixed_agent_order, budget, [&](const Allocation& a) {
        if (!seen.emplace(a.owner, true).second) return;
        nodes.push_back(a);
      });
    } else {
      BigInt count = 1;
      for (std::size_t j = 0; j < t; ++j) count *= n;
      if (count > budget) throw BudgetExceeded("owner-vector enumeration over budget", count.str());
      Allocation a;
      a.owner.assign(t, 1);
      for (;;) {
        if (check(notion, a, pre).satisfied) nodes.push_back(a);
        std::size_t j = 0;
        while (j < t && a.owner[j] == n) a.owner[j++] = 1;
        if (j == t) break;
        ++a.owner[j];
      }
    }
    if (nodes.empty()) {
      out.feasible = false;
      out.infeasible_round = t;
      return out;
    }
    node_total += static_cast<long long>(nodes.size());
    if (node_total > budget)
      throw BudgetExceeded("layered graph over budget", std::to_string(node_total));
    layers.push_back(std::move(nodes));
  }

  // Shortest path, edges only between consecutive layers.
  std::vector<long long> cost(layers[0].size(), 0);
  std::vector<std::vector<std::size_t>> parent(T);
  for (std::size_t t = 1; t < T; ++t) {
    std::vector<long long> next_cost(layers[t].size(), -1);
    parent[t].assign(layers[t].size(), 0);
    for (std::size_t b = 0; b < layers[t].size(); ++b) {
      for (std::size_t a = 0; a < layers[t - 1].size(); ++a) {
        long long c = cost[a] + count_adjustments(layers[t - 1][a], layers[t][b]);
        if (next_cost[b] < 0 || c < next_cost[b]) {
          next_cost[b] = c;
          parent[t][b] = a;
        }
      }
    }
    cost = std::move(next_cost);
  }
  std::size_t best = 0;
  for (std::size_t b = 1; b < cost.size(); ++b)
    if (cost[b] < cost[best]) best = b;
  out.feasible = true;
  out.optimum = cost[best];
  out.schedule.assign(T, {});
  std::size_t idx = best;
  for (std::size_t t = T; t-- > 0;) {
    out.schedule[t] = layers[t][idx];
    if (t > 0) idx = parent[t][idx];
  }
  return out;
}

bool ef1_literal(const Allocation& a, const ValuationProfile& v) {
  a.validate(v.agents());
  const int n = v.agents();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      BigInt vi_ai = 0, vi_aj = 0;
      for (std::size_t g = 1; g <= a.items(); ++g) {
        if (a.owner[g - 1] == i) vi_ai += v.value(i, g);
        if (a.owner[g - 1] == j) vi_aj += v.value(i, g);
      }
      if (vi_ai >= vi_aj) continue;
      bool fixed = false;
      for (std::size_t g = 1; g <= a.items() && !fixed; ++g) {
        if (a.owner[g - 1] == i && vi_ai - v.value(i, g) >= vi_aj) fixed = true;
        if (a.owner[g - 1] == j && vi_ai >= vi_aj - v.value(i, g)) fixed = true;
      }
      if (!fixed) return false;
    }
  }
  return true;
}

std::vector<Allocation> brute_ef1_noncontiguous(const ValuationProfile& v, long long budget) {
  const int n = v.agents();
  const std::size_t t = v.items();
  BigInt count = 1;
  for (std::size_t j = 0; j < t; ++j) count *= n;
  if (count > budget) throw BudgetExceeded("owner-vector enumeration over budget", count.str());
  std::vector<Allocation> out;
  Allocation a;
  a.owner.assign(t, 1);
  if (t == 0) {
    out.push_back(a);  // the empty assignment is EF1
    return out;
  }
  for (;;) {
    if (ef1_literal(a, v)) out.push_back(a);
    std::size_t j = 0;
    while (j < t && a.owner[j] == n) a.owner[j++] = 1;
    if (j == t) break;
    ++a.owner[j];
  }
  return out;
}

}  // namespace fairalloc
