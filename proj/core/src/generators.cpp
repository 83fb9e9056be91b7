#include "fairalloc/generators.hpp"

#include <random>

namespace fairalloc {

ValuationProfile gen_identical_ones(int n, std::size_t T) {
  if (n < 1 || T < 1) throw ContractViolation("gen_identical_ones: n >= 1 and T >= 1 required");
  std::vector<std::vector<BigInt>> vals(static_cast<std::size_t>(n),
                                        std::vector<BigInt>(T, BigInt(1)));
  ClassFlags flags;
  flags.identical = true;
  flags.binary = true;
  flags.restricted_additive = true;
  flags.goods_only = true;
  return ValuationProfile(std::move(vals), flags);
}

namespace {

ValuationProfile periodic_instance(int n, std::size_t T, std::size_t period, std::size_t block) {
  if (n < 2) throw ContractViolation("adversarial generators need n >= 2");
  std::vector<std::vector<BigInt>> vals(static_cast<std::size_t>(n), std::vector<BigInt>(T, 0));
  BigInt n2 = BigInt(n) * n;
  for (std::size_t t = 1; t <= T; ++t) {
    std::size_t c = (t - 1) / period;
    std::size_t offset = (t - 1) % period;  // block index i-1 = offset / block
    std::size_t i = offset / block;
    BigInt value = 1;  // n^{2c}
    for (std::size_t j = 0; j < c; ++j) value *= n2;
    vals[i][t - 1] = value;
  }
  ClassFlags flags;
  flags.goods_only = true;
  flags.restricted_additive = true;
  return ValuationProfile(std::move(vals), flags);
}

}  // namespace

ValuationProfile gen_nonidentical_propa(int n, std::size_t T) {
  return periodic_instance(n, T, static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                           static_cast<std::size_t>(n));
}

ValuationProfile gen_nonidentical_ef1(int n, std::size_t T) {
  return periodic_instance(n, T, 3 * static_cast<std::size_t>(n), 3);
}

ValuationProfile gen_binary_two_agent(std::size_t T) {
  if (T == 0 || T % 4 != 0)
    throw ContractViolation("gen_binary_two_agent: T must be a positive multiple of 4");
  std::size_t total = 4 * T + 4;
  std::vector<std::vector<BigInt>> vals(2, std::vector<BigInt>(total, 0));
  auto set_type = [&](std::size_t t, int type) {
    // type 0: (1,1); type 1: (1,0); type 2: (0,1)
    vals[0][t - 1] = (type == 0 || type == 1) ? 1 : 0;
    vals[1][t - 1] = (type == 0 || type == 2) ? 1 : 0;
  };
  for (std::size_t t = 1; t <= 2 * T + 2; ++t) set_type(t, 0);
  set_type(2 * T + 3, 1);
  set_type(2 * T + 4, 1);
  for (std::size_t t = 2 * T + 5; t <= total; ++t) {
    std::size_t pos = (t - (2 * T + 5)) % 8;
    set_type(t, pos < 4 ? 2 : 1);
  }
  ClassFlags flags;
  flags.binary = true;
  flags.goods_only = true;
  flags.restricted_additive = true;
  return ValuationProfile(std::move(vals), flags);
}

ValuationProfile gen_remark_132() {
  std::vector<std::vector<BigInt>> vals(2, {BigInt(1), BigInt(3), BigInt(2)});
  ClassFlags flags;
  flags.identical = true;
  flags.goods_only = true;
  flags.restricted_additive = true;
  return ValuationProfile(std::move(vals), flags);
}

ValuationProfile gen_random(RandomFamily family, int n, std::size_t T, const RandomParams& params,
                            std::uint64_t seed) {
  if (n < 1 || T < 1) throw ContractViolation("gen_random: n >= 1 and T >= 1 required");
  if (params.L > params.R) throw ContractViolation("gen_random: L <= R required");
  if (params.p <= 0.0 || params.p > 1.0) throw ContractViolation("gen_random: p in (0, 1] required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> range(params.L, params.R);
  // Bernoulli via an integer threshold to keep the draw sequence simple.
  std::uniform_int_distribution<std::uint32_t> coin(0, 999'999);
  auto flip = [&]() { return coin(rng) < static_cast<std::uint32_t>(params.p * 1'000'000.0); };

  std::vector<std::vector<BigInt>> vals(static_cast<std::size_t>(n), std::vector<BigInt>(T, 0));
  switch (family) {
    case RandomFamily::Uniform:
    case RandomFamily::Mixed:
      for (auto& row : vals)
        for (auto& v : row) v = range(rng);
      break;
    case RandomFamily::IdenticalUniform:
      for (std::size_t t = 0; t < T; ++t) {
        BigInt v = range(rng);
        for (auto& row : vals) row[t] = v;
      }
      break;
    case RandomFamily::Binary:
      for (auto& row : vals)
        for (auto& v : row) v = flip() ? 1 : 0;
      break;
    case RandomFamily::Restricted:
      if (params.L < 0) throw ContractViolation("restricted family requires L >= 0");
      for (std::size_t t = 0; t < T; ++t) {
        BigInt inherent = range(rng);
        for (;;) {
          bool any = false;
          std::vector<bool> interest(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) {
            interest[static_cast<std::size_t>(i)] = flip();
            any = any || interest[static_cast<std::size_t>(i)];
          }
          if (!any && inherent != 0) continue;  // redraw: someone must be interested
          for (int i = 0; i < n; ++i)
            vals[static_cast<std::size_t>(i)][t] = interest[static_cast<std::size_t>(i)] ? inherent : 0;
          break;
        }
      }
      break;
  }
  ClassFlags flags;
  switch (family) {
    case RandomFamily::Uniform:
      flags = {};
      flags.goods_only = params.L >= 0;
      flags.chores_only = params.R <= 0;
      break;
    case RandomFamily::IdenticalUniform:
      flags = {};
      flags.identical = true;
      flags.restricted_additive = true;
      flags.goods_only = params.L >= 0;
      flags.chores_only = params.R <= 0;
      break;
    case RandomFamily::Binary:
      flags = {};
      flags.binary = true;
      flags.goods_only = true;
      flags.restricted_additive = true;
      break;
    case RandomFamily::Restricted:
      flags = {};
      flags.restricted_additive = true;
      flags.goods_only = true;
      break;
    case RandomFamily::Mixed:
      flags = {};
      break;
  }
  // Flags only promise what the draw enforces; coincidences stay unflagged.
  return ValuationProfile(std::move(vals), flags);
}

}  // namespace fairalloc
