#include "fairalloc/instance_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fairalloc {

using nlohmann::json;

namespace {

BigInt parse_value(const json& v) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  throw ContractViolation("instance values must be integers or decimal strings");
}

}  // namespace

ValuationProfile profile_from_json(const json& j) {
  if (j.contains("generator")) {
    std::uint64_t seed = j.value("seed", std::uint64_t{0});
    return resolve_generator(j.at("generator").get<std::string>(), j.value("params", json::object()),
                             seed);
  }
  int n = j.at("n").get<int>();
  const json& items = j.at("items");
  if (!items.is_array() || static_cast<int>(items.size()) != n)
    throw ContractViolation("items must hold one value sequence per agent");
  std::vector<std::vector<BigInt>> vals;
  for (const json& row : items) {
    std::vector<BigInt> r;
    for (const json& v : row) r.push_back(parse_value(v));
    vals.push_back(std::move(r));
  }
  ValuationProfile p(std::move(vals));
  if (j.contains("flags")) {
    ClassFlags f;
    const json& fl = j.at("flags");
    f.identical = fl.value("identical", false);
    f.binary = fl.value("binary", false);
    f.restricted_additive = fl.value("restricted_additive", false);
    f.goods_only = fl.value("goods_only", false);
    f.chores_only = fl.value("chores_only", false);
    std::vector<std::vector<BigInt>> rows;
    for (int i = 1; i <= p.agents(); ++i) {
      std::vector<BigInt> row;
      for (std::size_t g = 1; g <= p.items(); ++g) row.push_back(p.value(i, g));
      rows.push_back(std::move(row));
    }
    return ValuationProfile(std::move(rows), f);
  }
  return p;
}

json profile_to_json(const ValuationProfile& v) {
  json j;
  j["n"] = v.agents();
  json items = json::array();
  for (int i = 1; i <= v.agents(); ++i) {
    json row = json::array();
    for (std::size_t g = 1; g <= v.items(); ++g) row.push_back(v.value(i, g).str());
    items.push_back(std::move(row));
  }
  j["items"] = std::move(items);
  const ClassFlags& f = v.flags();
  j["flags"] = {{"identical", f.identical},
                {"binary", f.binary},
                {"restricted_additive", f.restricted_additive},
                {"goods_only", f.goods_only},
                {"chores_only", f.chores_only}};
  return j;
}

ValuationProfile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot read instance file: " + path);
  json j;
  in >> j;
  return profile_from_json(j);
}

void save_instance(const ValuationProfile& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write instance file: " + path);
  out << profile_to_json(v).dump(2) << "\n";
}

ValuationProfile resolve_generator(const std::string& name, const json& params,
                                   std::uint64_t seed) {
  auto n = [&] { return params.value("n", 2); };
  auto T = [&] { return params.value("T", std::size_t{1}); };
  RandomParams rp;
  rp.L = params.value("L", 1LL);
  rp.R = params.value("R", 10LL);
  rp.p = params.value("p", 0.5);

  if (name == "identical-ones") return gen_identical_ones(n(), T());
  if (name == "nonidentical-propa") return gen_nonidentical_propa(n(), T());
  if (name == "nonidentical-ef1") return gen_nonidentical_ef1(n(), T());
  if (name == "binary-two-agent") return gen_binary_two_agent(T());
  if (name == "remark-132") return gen_remark_132();
  if (name == "uniform") return gen_random(RandomFamily::Uniform, n(), T(), rp, seed);
  if (name == "identical-uniform")
    return gen_random(RandomFamily::IdenticalUniform, n(), T(), rp, seed);
  if (name == "binary") return gen_random(RandomFamily::Binary, n(), T(), rp, seed);
  if (name == "restricted") return gen_random(RandomFamily::Restricted, n(), T(), rp, seed);
  if (name == "mixed") {
    if (!params.contains("L")) rp.L = -10;
    return gen_random(RandomFamily::Mixed, n(), T(), rp, seed);
  }
  throw ContractViolation("unknown generator: " + name);
}

std::string instance_digest(const ValuationProfile& v) {
  // FNV-1a over the canonical text form; collision-resistance is not needed,
  // the digest only labels certificates.
  std::ostringstream os;
  os << v.agents() << ";";
  for (int i = 1; i <= v.agents(); ++i)
    for (std::size_t g = 1; g <= v.items(); ++g) os << v.value(i, g) << ",";
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : os.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

}  // namespace fairalloc
