#include <doctest.h>

#include <random>

#include "fairalloc/contiguous.hpp"
#include "fairalloc/generators.hpp"
#include "fairalloc/oracles.hpp"

using namespace fairalloc;

namespace {

ValuationProfile identical(std::vector<long long> vals, int n = 2) {
  std::vector<BigInt> row(vals.begin(), vals.end());
  return ValuationProfile(std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n), row));
}

}  // namespace

TEST_CASE("propa pointer: all-ones n=2 cut trace") {
  PropaPointerAllocator p;
  ValuationProfile v = gen_identical_ones(2, 4);
  std::vector<std::vector<std::size_t>> cuts;
  ValuationProfile stream;
  for (std::size_t t = 1; t <= 4; ++t) {
    stream.append_item({BigInt(1), BigInt(1)});
    p.on_item(stream);
    cuts.push_back(p.cuts());
  }
  CHECK(cuts[0] == std::vector<std::size_t>{0});
  CHECK(cuts[1] == std::vector<std::size_t>{1});
  CHECK(cuts[2] == std::vector<std::size_t>{1});
  CHECK(cuts[3] == std::vector<std::size_t>{2});
}

TEST_CASE("propa pointer: single item leaves all cuts at zero") {
  PropaPointerAllocator p;
  Allocation a = p.on_item(identical({7}, 3));
  CHECK(p.cuts() == std::vector<std::size_t>{0, 0});
  CHECK(a.owner == std::vector<int>{3});
}

TEST_CASE("propa pointer: values (0,1) with n=3 move no pointer") {
  PropaPointerAllocator p;
  p.on_item(identical({0}, 3));
  p.on_item(identical({0, 1}, 3));
  CHECK(p.cuts() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("propa pointer rejects nonidentical profiles") {
  PropaPointerAllocator p;
  ValuationProfile v({{BigInt(1)}, {BigInt(2)}});
  CHECK_THROWS_AS(p.on_item(v), Unsupported);
}

TEST_CASE("propa pointer: per-round PROPa, monotone cuts, bounded adjustments") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::size_t T = 1 + rng() % 40;
    RandomParams params;
    params.L = 1;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::IdenticalUniform, n, T, params, rng());
    PropaPointerAllocator p;
    RunResult r = run_online(p, v, {Notion::PROPa});
    for (std::size_t t = 1; t <= T; ++t) {
      CHECK(r.rounds[t - 1].verdicts.at(Notion::PROPa).satisfied);
    }
    CHECK(r.ledger.cumulative <= static_cast<long long>(n - 1) * static_cast<long long>(T));
  }
}

TEST_CASE("lumpy tie step traces") {
  auto oracle_132 = IntervalValuationOracle::additive({BigInt(1), BigInt(3), BigInt(2)});
  CHECK(lumpy_tie_step(oracle_132, 3).cuts == std::vector<std::size_t>{2});
  CHECK(lumpy_tie_step(oracle_132, 1).cuts == std::vector<std::size_t>{1});
  auto ones = IntervalValuationOracle::additive({BigInt(1), BigInt(1)});
  CHECK(lumpy_tie_step(ones, 2).cuts == std::vector<std::size_t>{1});
}

TEST_CASE("lumpy tie allocator: remark trace and adjustment count") {
  LumpyTieAllocator lt;
  RunResult r = run_online(lt, identical({1, 3, 2}), {Notion::EF1});
  CHECK(r.rounds[2].allocation.owner == std::vector<int>{1, 1, 2});
  CHECK(r.ledger.cumulative == 1);
  for (const auto& round : r.rounds) CHECK(round.verdicts.at(Notion::EF1).satisfied);
}

TEST_CASE("lumpy tie: EF1 and nondecreasing cut on random identical streams") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t T = 1 + rng() % 30;
    RandomParams params;
    params.L = 0;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::IdenticalUniform, 2, T, params, rng());
    LumpyTieAllocator lt;
    ValuationProfile stream;
    std::size_t prev_cut = 0;
    for (std::size_t t = 1; t <= T; ++t) {
      stream.append_item({v.value(1, t), v.value(2, t)});
      Allocation a = lt.on_item(stream);
      CHECK(is_ef1(a, stream).satisfied);
      CHECK(lt.last().cuts[0] >= prev_cut);
      prev_cut = lt.last().cuts[0];
    }
  }
}

TEST_CASE("lumpy tie with a non-additive concave interval oracle") {
  // Identical monotone valuation depending only on bundle size:
  // v(l, r] = f(r - l) with f concave increasing.
  auto f = [](std::size_t len) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= len; ++k) total += BigInt(std::max<long long>(10 - static_cast<long long>(k), 1));
    return total;
  };
  IntervalValuationOracle oracle([&](std::size_t l, std::size_t r) { return f(r - l); });
  std::size_t prev_cut = 0;
  for (std::size_t t = 1; t <= 12; ++t) {
    ContiguousAllocation ca = lumpy_tie_step(oracle, t);
    CHECK(ef1_certificate_two_blocks(oracle, ca.cuts[0], t));
    CHECK(ca.cuts[0] >= prev_cut);
    prev_cut = ca.cuts[0];
  }
}

TEST_CASE("leximin2 dp traces") {
  CHECK(leximin2_dp({1, 3, 2}, 2).allocation.cuts == std::vector<std::size_t>{2});
  CHECK(leximin2_dp({1, 3, 2}, 1).allocation.cuts.empty());
  CHECK(leximin2_dp({1, 1, 1, 1}, 2).allocation.cuts == std::vector<std::size_t>{2});
  // Base row f[1][j] = (j).
  Leximin2Result r = leximin2_dp({1, 3, 2}, 2);
  CHECK(r.tables.f[1][3] == std::vector<std::size_t>{3});
  CHECK(r.tables.h[1][3] == std::vector<BigInt>{6});
}

TEST_CASE("leximin2 dp equals the enumeration oracle") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::size_t m = 1 + rng() % 10;
    RandomParams params;
    params.L = 0;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::IdenticalUniform, 1, m, params, rng());
    std::vector<BigInt> values;
    for (std::size_t g = 1; g <= m; ++g) values.push_back(v.value(1, g));
    CHECK(leximin2_dp(values, n).allocation == brute_leximin2(values, n));
  }
}

TEST_CASE("offline ef1 traces") {
  OfflineEf1Result r = offline_ef1({1, 3, 2}, 2);
  CHECK(r.allocation.cuts == std::vector<std::size_t>{2});
  CHECK(r.fixed_agent == 2);
  CHECK(r.allocation == r.initial);  // no envy up to one item, no move

  // Equal blocks: the leximin^2 start is already EF1.
  OfflineEf1Result eq = offline_ef1({2, 2, 2, 2}, 2);
  CHECK(eq.allocation == eq.initial);

  CHECK(offline_ef1({5, 1}, 1).allocation.cuts.empty());
}

TEST_CASE("offline ef1: output is EF1 and the fixed block never changes") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::size_t m = 1 + rng() % 25;
    RandomParams params;
    params.L = 1;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::IdenticalUniform, n, m, params, rng());
    std::vector<BigInt> values;
    for (std::size_t g = 1; g <= m; ++g) values.push_back(v.value(1, g));
    OfflineEf1Result r = offline_ef1(values, n);
    ValuationProfile profile(
        std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n), values));
    CHECK(is_ef1(induce(r.allocation), profile).satisfied);
    int i = r.fixed_agent;
    std::size_t lo_init = i == 1 ? 0 : r.initial.cuts[static_cast<std::size_t>(i) - 2];
    std::size_t hi_init = i == n ? m : r.initial.cuts[static_cast<std::size_t>(i) - 1];
    std::size_t lo_fin = i == 1 ? 0 : r.allocation.cuts[static_cast<std::size_t>(i) - 2];
    std::size_t hi_fin = i == n ? m : r.allocation.cuts[static_cast<std::size_t>(i) - 1];
    CHECK(lo_init == lo_fin);
    CHECK(hi_init == hi_fin);
  }
}

TEST_CASE("online ef1 allocator") {
  OnlineEf1Allocator online;
  RunResult r = run_online(online, identical({1, 3, 2}), {Notion::EF1});
  CHECK(r.rounds[2].allocation.owner == std::vector<int>{1, 1, 2});
  for (const auto& round : r.rounds) CHECK(round.verdicts.at(Notion::EF1).satisfied);

  OnlineEf1Allocator reject;
  CHECK_THROWS_AS(run_online(reject, identical({1, 0, 2})), ContractViolation);
  OnlineEf1Allocator reject_neg;
  CHECK_THROWS_AS(run_online(reject_neg, identical({-1})), ContractViolation);
}

TEST_CASE("online ef1: separator monotonicity of the leximin^2 allocation") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::size_t T = 2 + rng() % 20;
    RandomParams params;
    params.L = 1;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::IdenticalUniform, n, T, params, rng());
    OnlineEf1Allocator online;
    ValuationProfile stream;
    std::vector<std::size_t> prev;
    std::vector<BigInt> column(static_cast<std::size_t>(n));
    for (std::size_t t = 1; t <= T; ++t) {
      for (int i = 1; i <= n; ++i) column[static_cast<std::size_t>(i) - 1] = v.value(i, t);
      stream.append_item(column);
      online.on_item(stream);
      const auto& cuts = online.last_initial().cuts;
      if (!prev.empty())
        for (std::size_t j = 0; j < cuts.size(); ++j) CHECK(prev[j] <= cuts[j]);
      prev = cuts;
    }
  }
}

TEST_CASE("offline propa splitter traces") {
  SplitterResult ones = offline_propa_splitter(gen_identical_ones(2, 4));
  CHECK(ones.allocation.cuts == std::vector<std::size_t>{2});
  CHECK(ones.block_owner == std::vector<int>{1, 2});

  SplitterResult single = offline_propa_splitter(gen_identical_ones(1, 3));
  CHECK(single.allocation.cuts.empty());
  CHECK(single.block_owner == std::vector<int>{1});

  ValuationProfile cross({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  SplitterResult r = offline_propa_splitter(cross);
  CHECK(r.to_allocation().owner == std::vector<int>{1, 2});
  CHECK(satisfies_eq1(r.to_allocation(), cross).satisfied);
}

TEST_CASE("offline propa splitter: every block satisfies the per-agent condition") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::size_t m = 1 + rng() % 30;
    RandomParams params;
    params.L = 0;
    params.R = 9;
    ValuationProfile v = gen_random(RandomFamily::Uniform, n, m, params, rng());
    SplitterResult r = offline_propa_splitter(v);
    CHECK(satisfies_eq1(r.to_allocation(), v).satisfied);
  }
}

TEST_CASE("splitter rejects chores") {
  CHECK_THROWS_AS(offline_propa_splitter(identical({-1})), Unsupported);
}
