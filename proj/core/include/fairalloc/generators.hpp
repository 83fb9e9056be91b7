#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fairalloc/types.hpp"

namespace fairalloc {

/// All agents value every item at 1. Identical, binary.
ValuationProfile gen_identical_ones(int n, std::size_t T);

/// v_i(g_t) = n^{2c} when cn^2 + (i-1)n < t <= cn^2 + in for some c >= 0,
/// else 0. Periods of length n^2 split into n blocks of length n.
ValuationProfile gen_nonidentical_propa(int n, std::size_t T);

/// v_i(g_t) = n^{2c} when 3cn + 3(i-1) < t <= 3cn + 3i, else 0.
/// Periods of length 3n split into n blocks of length 3.
ValuationProfile gen_nonidentical_ef1(int n, std::size_t T);

/// Two binary agents, 4T+4 items: 2T+2 of type 0 (1,1), 2 of type 1 (1,0),
/// then 2T items in periods of 8 with 4 of type 2 (0,1) and 4 of type 1.
/// T must be a positive multiple of 4.
ValuationProfile gen_binary_two_agent(std::size_t T);

/// Two agents, identical values (1, 3, 2).
ValuationProfile gen_remark_132();

enum class RandomFamily {
  Uniform,           // independent values in [L, R] per agent and item
  IdenticalUniform,  // one shared value per item in [L, R]
  Binary,            // each value 1 with probability p, else 0
  Restricted,        // inherent value in [L, R], each agent interested w.p. p,
                     // redrawn until at least one agent is interested
  Mixed,             // independent values in [Lneg, Rpos], mixed manna
};

struct RandomParams {
  long long L = 1;
  long long R = 1;
  double p = 0.5;
};

/// Deterministic under (family, n, T, params, seed); PRNG is mt19937_64.
ValuationProfile gen_random(RandomFamily family, int n, std::size_t T, const RandomParams& params,
                            std::uint64_t seed);

inline constexpr const char* kPrngName = "mt19937_64";

}  // namespace fairalloc
