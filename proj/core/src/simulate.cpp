#include "fairalloc/simulate.hpp"

#include "fairalloc/contiguous.hpp"
#include "fairalloc/noncontiguous.hpp"

namespace fairalloc {

RunResult run_online(OnlineAllocator& allocator, const ValuationProfile& instance,
                     const std::set<Notion>& checks, bool strict) {
  RunResult result;
  ValuationProfile stream;
  std::vector<BigInt> column(static_cast<std::size_t>(instance.agents()));
  for (std::size_t t = 1; t <= instance.items(); ++t) {
    for (int i = 1; i <= instance.agents(); ++i)
      column[static_cast<std::size_t>(i) - 1] = instance.value(i, t);
    stream.append_item(column);

    RoundRecord rec;
    rec.allocation = allocator.on_item(stream);
    if (rec.allocation.items() != t)
      throw ContractViolation("allocator did not return an allocation covering M_t");
    rec.allocation.validate(instance.agents());

    rec.adjustments =
        t == 1 ? 0 : count_adjustments(result.rounds.back().allocation, rec.allocation);
    result.ledger.record(rec.adjustments);

    bool violated = false;
    for (Notion notion : checks) {
      FairnessReport rep = check(notion, rec.allocation, stream);
      violated = violated || !rep.satisfied;
      rec.verdicts.emplace(notion, std::move(rep));
    }
    result.rounds.push_back(std::move(rec));
    if (strict && violated) {
      result.first_violation = t;
      break;
    }
  }
  return result;
}

std::vector<std::string> allocator_names() {
  return {"envy-balancing",     "greedy-restricted", "greedy-restricted-chores",
          "greedy-identical",   "greedy-identical-chores", "layer-updating",
          "round-robin-rerun",  "propa-pointer",     "lumpy-tie",
          "ef1-leximin-online", "propa-splitter-offline", "ef1-offline",
          "leximin2-dp"};
}

std::unique_ptr<OnlineAllocator> make_allocator(const std::string& name) {
  if (name == "envy-balancing") return std::make_unique<EnvyBalancingAllocator>();
  if (name == "greedy-restricted") return std::make_unique<GreedyRestrictedAllocator>();
  if (name == "greedy-restricted-chores")
    return std::make_unique<GreedyRestrictedAllocator>(GreedyMode::Chores);
  if (name == "greedy-identical") return std::make_unique<GreedyIdenticalAllocator>();
  if (name == "greedy-identical-chores")
    return std::make_unique<GreedyIdenticalAllocator>(GreedyMode::Chores);
  if (name == "layer-updating") return std::make_unique<LayerUpdatingAllocator>();
  if (name == "round-robin-rerun") return std::make_unique<RoundRobinRerunAllocator>();
  if (name == "propa-pointer") return std::make_unique<PropaPointerAllocator>();
  if (name == "lumpy-tie") return std::make_unique<LumpyTieAllocator>();
  if (name == "ef1-leximin-online") return std::make_unique<OnlineEf1Allocator>();
  if (name == "propa-splitter-offline") return std::make_unique<PropaSplitterRerunAllocator>();
  if (name == "ef1-offline") return std::make_unique<OfflineEf1RerunAllocator>();
  if (name == "leximin2-dp") return std::make_unique<Leximin2RerunAllocator>();
  throw ContractViolation("unknown allocator: " + name);
}

}  // namespace fairalloc
