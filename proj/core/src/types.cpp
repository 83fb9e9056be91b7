#include "fairalloc/types.hpp"

#include <algorithm>

namespace fairalloc {

ValuationProfile::ValuationProfile(std::vector<std::vector<BigInt>> values, ClassFlags flags)
    : values_(std::move(values)), flags_(flags) {
  validate();
}

const BigInt& ValuationProfile::value(int agent, std::size_t item) const {
  if (agent < 1 || agent > agents()) throw ContractViolation("agent index out of range");
  if (item < 1 || item > items()) throw ContractViolation("item index out of range");
  return values_[agent - 1][item - 1];
}

BigInt ValuationProfile::bundle_value(int agent, const std::vector<std::size_t>& bundle) const {
  BigInt sum = 0;
  for (std::size_t g : bundle) sum += value(agent, g);
  return sum;
}

BigInt ValuationProfile::interval_value(int agent, std::size_t l, std::size_t r) const {
  if (l > r || r > items()) throw ContractViolation("bad interval");
  BigInt sum = 0;
  for (std::size_t g = l + 1; g <= r; ++g) sum += value(agent, g);
  return sum;
}

BigInt ValuationProfile::agent_total(int agent) const { return interval_value(agent, 0, items()); }

BigInt ValuationProfile::agent_max(int agent) const {
  BigInt best = 0;
  bool first = true;
  for (std::size_t g = 1; g <= items(); ++g) {
    const BigInt& v = value(agent, g);
    if (first || v > best) best = v;
    first = false;
  }
  return first ? BigInt(0) : best;
}

BigInt ValuationProfile::max_item_value() const {
  BigInt best = 0;
  bool first = true;
  for (int i = 1; i <= agents(); ++i) {
    BigInt v = agent_max(i);
    if (first || v > best) best = v;
    first = false;
  }
  return first ? BigInt(0) : best;
}

ValuationProfile ValuationProfile::prefix(std::size_t t) const {
  if (t > items()) throw ContractViolation("prefix longer than profile");
  std::vector<std::vector<BigInt>> vals(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    vals[i].assign(values_[i].begin(), values_[i].begin() + static_cast<std::ptrdiff_t>(t));
  ValuationProfile p;
  p.values_ = std::move(vals);
  p.flags_ = flags_;
  return p;
}

void ValuationProfile::append_item(const std::vector<BigInt>& per_agent) {
  if (values_.empty()) values_.resize(per_agent.size());
  if (per_agent.size() != values_.size())
    throw ContractViolation("append_item: wrong number of agent values");
  for (std::size_t i = 0; i < per_agent.size(); ++i) values_[i].push_back(per_agent[i]);
}

ClassFlags ValuationProfile::detect_flags(const std::vector<std::vector<BigInt>>& values) {
  ClassFlags f;
  f.identical = true;
  f.binary = true;
  f.restricted_additive = true;
  f.goods_only = true;
  f.chores_only = true;
  std::size_t t = values.empty() ? 0 : values[0].size();
  for (const auto& row : values) {
    for (const auto& v : row) {
      if (v != 0 && v != 1) f.binary = false;
      if (v < 0) f.goods_only = false;
      if (v > 0) f.chores_only = false;
    }
  }
  for (std::size_t g = 0; g < t; ++g) {
    BigInt inherent = 0;
    bool seen = false;
    for (const auto& row : values) {
      if (row[g] != values[0][g]) f.identical = false;
      if (row[g] != 0) {
        if (seen && row[g] != inherent) f.restricted_additive = false;
        inherent = row[g];
        seen = true;
      }
    }
  }
  return f;
}

void ValuationProfile::validate() const {
  if (values_.empty()) throw ContractViolation("profile needs at least one agent");
  std::size_t t = values_[0].size();
  for (const auto& row : values_)
    if (row.size() != t) throw ContractViolation("agent value sequences differ in length");
  ClassFlags actual = detect_flags(values_);
  if (flags_.identical && !actual.identical)
    throw ContractViolation("identical flag set but values differ between agents");
  if (flags_.binary && !actual.binary)
    throw ContractViolation("binary flag set but a value is outside {0, 1}");
  if (flags_.restricted_additive && !actual.restricted_additive)
    throw ContractViolation("restricted_additive flag set but nonzero values of an item differ");
  if (flags_.goods_only && !actual.goods_only)
    throw ContractViolation("goods_only flag set but a value is negative");
  if (flags_.chores_only && !actual.chores_only)
    throw ContractViolation("chores_only flag set but a value is positive");
}

IntervalValuationOracle IntervalValuationOracle::additive(std::vector<BigInt> item_values) {
  auto prefix = std::make_shared<std::vector<BigInt>>();
  prefix->push_back(0);
  for (const auto& v : item_values) prefix->push_back(prefix->back() + v);
  return IntervalValuationOracle([prefix](std::size_t l, std::size_t r) -> BigInt {
    if (r >= prefix->size()) throw ContractViolation("interval beyond known items");
    return (*prefix)[r] - (*prefix)[l];
  });
}

std::vector<std::vector<std::size_t>> Allocation::bundles(int n) const {
  validate(n);
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < owner.size(); ++j)
    out[static_cast<std::size_t>(owner[j]) - 1].push_back(j + 1);
  return out;
}

void Allocation::validate(int n) const {
  for (int o : owner)
    if (o < 1 || o > n) throw ContractViolation("allocation owner out of range");
}

void ContiguousAllocation::validate() const {
  std::size_t prev = 0;
  for (std::size_t p : cuts) {
    if (p < prev || p > horizon) throw ContractViolation("cuts must be nondecreasing within [0, t]");
    prev = p;
  }
}

Allocation induce(const ContiguousAllocation& ca) {
  std::vector<int> ident(static_cast<std::size_t>(ca.agents()));
  for (int i = 0; i < ca.agents(); ++i) ident[static_cast<std::size_t>(i)] = i + 1;
  return induce(ca, ident);
}

Allocation induce(const ContiguousAllocation& ca, const std::vector<int>& block_owner) {
  ca.validate();
  if (block_owner.size() != static_cast<std::size_t>(ca.agents()))
    throw ContractViolation("block_owner must assign every block");
  Allocation a;
  a.owner.resize(ca.horizon);
  std::size_t prev = 0;
  for (int b = 1; b <= ca.agents(); ++b) {
    std::size_t end = (b == ca.agents()) ? ca.horizon : ca.cuts[static_cast<std::size_t>(b) - 1];
    for (std::size_t j = prev; j < end; ++j) a.owner[j] = block_owner[static_cast<std::size_t>(b) - 1];
    prev = end;
  }
  return a;
}

void AdjustmentLedger::record(long long count) {
  if (count < 0) throw ContractViolation("negative adjustment count");
  per_round.push_back(count);
  cumulative += count;
}

long long count_adjustments(const Allocation& prev, const Allocation& next) {
  if (next.items() != prev.items() + 1)
    throw ContractViolation("count_adjustments: next must cover exactly one more item");
  long long moved = 0;
  for (std::size_t j = 0; j < prev.items(); ++j)
    if (prev.owner[j] != next.owner[j]) ++moved;
  return moved;
}

long long count_adjustments(const ContiguousAllocation& prev, const ContiguousAllocation& next) {
  return count_adjustments(induce(prev), induce(next));
}

}  // namespace fairalloc
