#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "fairalloc/generators.hpp"
#include "fairalloc/types.hpp"

namespace fairalloc {

/// Instance files are JSON, either an explicit matrix
///   {"n": 2, "items": [["1", "3"], ["0", "2"]]}
/// with values as decimal strings (plain integers accepted on input), or a
/// generator reference
///   {"generator": "identical-ones", "params": {"n": 2, "T": 10}, "seed": 7}.
ValuationProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const ValuationProfile& v);

ValuationProfile load_instance(const std::string& path);
void save_instance(const ValuationProfile& v, const std::string& path);

/// Resolves a named generator. Known names: identical-ones,
/// nonidentical-propa, nonidentical-ef1, binary-two-agent, remark-132,
/// uniform, identical-uniform, binary, restricted, mixed.
ValuationProfile resolve_generator(const std::string& name, const nlohmann::json& params,
                                   std::uint64_t seed);

/// Short stable digest of the resolved values, used to tag certificates.
std::string instance_digest(const ValuationProfile& v);

}  // namespace fairalloc
