#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "fairalloc/fairness.hpp"
#include "fairalloc/types.hpp"

namespace fairalloc {

inline constexpr long long kDefaultOracleBudget = 1'000'000;

/// C(t+n-1, n-1): the number of nondecreasing cut tuples.
BigInt contiguous_allocation_count(int n, std::size_t t);

/// Visits every nondecreasing cut tuple over [0, t] exactly once in
/// lexicographic order. Refuses with BudgetExceeded when the count exceeds
/// the budget.
void enumerate_contiguous(int n, std::size_t t, long long budget,
                          const std::function<void(const ContiguousAllocation&)>& visit);
std::vector<ContiguousAllocation> enumerate_contiguous(int n, std::size_t t,
                                                       long long budget = kDefaultOracleBudget);

/// Exhaustive leximin^2: scans every contiguous allocation, keeps the
/// compare_leximin2 maximum. Oracle for the DP.
ContiguousAllocation brute_leximin2(const std::vector<BigInt>& values, int n,
                                    long long budget = kDefaultOracleBudget);

/// Owners of a forced prefix across every allocation satisfying the notion.
struct ForcedOwnershipCertificate {
  std::size_t round = 0;
  std::size_t prefix_len = 0;
  Notion notion = Notion::EF1;
  /// Agents owning the whole prefix in at least one valid allocation.
  std::set<int> owners;
  /// A valid allocation split the prefix across several agents.
  bool split_seen = false;
  std::size_t valid_count = 0;

  bool forced() const { return owners.size() == 1 && !split_seen && valid_count > 0; }
};

/// Enumerates contiguous allocations of M_t (all block-to-agent
/// permutations unless fixed_agent_order), filters by the notion checker,
/// and reports who owns items 1..prefix_len. An empty valid set is a
/// result, not an error.
ForcedOwnershipCertificate certify_forced_block(const ValuationProfile& v_prefix, Notion notion,
                                                std::size_t prefix_len = 1,
                                                bool fixed_agent_order = false,
                                                long long budget = kDefaultOracleBudget);

struct MinAdjustmentResult {
  bool feasible = false;
  std::size_t infeasible_round = 0;  // set when !feasible
  long long optimum = 0;
  std::vector<Allocation> schedule;  // witness, one allocation per round
};

/// Exact minimum cumulative adjustments any algorithm could achieve:
/// shortest path through the layered graph whose layer-t nodes are the
/// valid allocations of M_t and whose edges are adjustment counts.
MinAdjustmentResult min_adjustment_schedule(const ValuationProfile& v, Notion notion,
                                            bool contiguous, bool fixed_agent_order = false,
                                            long long budget = kDefaultOracleBudget);

/// Definition-literal EF1 scan over every removal candidate.
bool ef1_literal(const Allocation& a, const ValuationProfile& v);

/// All EF1 owner vectors of the instance (ground truth for is_ef1).
/// Budget bounds n^t.
std::vector<Allocation> brute_ef1_noncontiguous(const ValuationProfile& v,
                                                long long budget = kDefaultOracleBudget);

}  // namespace fairalloc
