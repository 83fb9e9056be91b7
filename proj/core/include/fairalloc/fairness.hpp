#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairalloc/types.hpp"

namespace fairalloc {

enum class Notion { EF, EF1, PROPa, Eq1 };

std::string to_string(Notion n);
std::optional<Notion> notion_from_string(const std::string& s);

struct FairnessWitness {
  int envier = 0;   // agent i of the violated pair (or the short agent for PROPa/Eq1)
  int envied = 0;   // agent j, 0 when not a pairwise notion
  std::string detail;
};

struct FairnessReport {
  Notion notion;
  bool satisfied = false;
  std::optional<FairnessWitness> witness;  // present iff !satisfied
};

/// satisfied iff v_i(A_i) >= v_i(A_j) for all i, j.
FairnessReport is_ef(const Allocation& a, const ValuationProfile& v);

/// Mixed-manna EF1: for all i, j there exists g in A_i u A_j with
/// v_i(A_i - g) >= v_i(A_j - g). Tries the best single candidates
/// (most-negative own item, most-positive other item) and falls back to a
/// scan over all of A_i u A_j; the scan is the ground truth.
FairnessReport is_ef1(const Allocation& a, const ValuationProfile& v);

/// n*v_i(A_i) >= v_i(M) - (n-1)*v^max with the global max item value.
/// Goods-only; throws Unsupported when chores are present.
FairnessReport is_propa(const Allocation& a, const ValuationProfile& v);

/// Per-agent variant: n*v_i(A_i) >= v_i(M) - (n-1)*v_i^max(M).
FairnessReport satisfies_eq1(const Allocation& a, const ValuationProfile& v);

FairnessReport check(Notion n, const Allocation& a, const ValuationProfile& v);

/// EF1 certificate for two contiguous blocks of an identical monotone
/// valuation, testing only endpoint removals (the only removals that keep
/// bundles contiguous). Sufficient for EF1.
bool ef1_certificate_two_blocks(const IntervalValuationOracle& v, std::size_t cut, std::size_t t);

/// Sorted block values plus the cut tuple P(A) = (l_0, ..., l_k), the key
/// of the leximin^2 order.
struct SortedValueTuple {
  std::vector<BigInt> q;       // nondecreasing block values
  std::vector<std::size_t> p;  // (l_0, ..., l_k)
};

SortedValueTuple sorted_value_tuple(const ContiguousAllocation& ca, const std::vector<BigInt>& prefix_sums);

enum class Ordering { Worse, Equal, Better };

/// x better than y iff Q(x) lexicographically larger, or Q equal and P(x)
/// lexicographically smaller. Equal implies identical (q, p).
Ordering compare_leximin2(const SortedValueTuple& x, const SortedValueTuple& y);

}  // namespace fairalloc
