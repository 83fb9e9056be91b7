// fairalloc command-line harness.
//
// Subcommands:
//   run          stream an instance through an online allocator, emit per-round rows
//   gen          resolve a generator (or instance spec) and write the JSON instance
//   verify       forced-ownership certificates / minimum-adjustment schedules
//   oracle       certificate emission for a single round (JSON)
//   bound-report cumulative-adjustment ratios against the documented bounds
//
// Exit codes: 0 ok, 2 fairness violation under --strict, 3 budget refusal,
// 4 configuration error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "fairalloc/contiguous.hpp"
#include "fairalloc/fairness.hpp"
#include "fairalloc/generators.hpp"
#include "fairalloc/instance_io.hpp"
#include "fairalloc/noncontiguous.hpp"
#include "fairalloc/oracles.hpp"
#include "fairalloc/simulate.hpp"

using nlohmann::json;
using namespace fairalloc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConfig = 4;

std::set<Notion> parse_checks(const std::string& csv) {
  std::set<Notion> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto n = notion_from_string(tok);
    if (!n) throw ContractViolation("unknown fairness notion: " + tok);
    out.insert(*n);
  }
  return out;
}

/// Writes to --out when given, else stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ContractViolation("cannot write output file: " + out_path);
  out << text;
}

std::string run_csv(const RunResult& result, const std::set<Notion>& checks) {
  std::ostringstream os;
  os << "t,adjustments,cumulative";
  for (Notion n : checks) os << "," << to_string(n);
  os << "\n";
  long long cumulative = 0;
  for (std::size_t t = 1; t <= result.rounds.size(); ++t) {
    const RoundRecord& rec = result.rounds[t - 1];
    cumulative += rec.adjustments;
    os << t << "," << rec.adjustments << "," << cumulative;
    for (Notion n : checks) os << "," << (rec.verdicts.at(n).satisfied ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

json run_json(const RunResult& result, const std::set<Notion>& checks) {
  json rounds = json::array();
  long long cumulative = 0;
  for (std::size_t t = 1; t <= result.rounds.size(); ++t) {
    const RoundRecord& rec = result.rounds[t - 1];
    cumulative += rec.adjustments;
    json row{{"t", t}, {"adjustments", rec.adjustments}, {"cumulative", cumulative}};
    json verdicts = json::object();
    for (Notion n : checks) verdicts[to_string(n)] = rec.verdicts.at(n).satisfied;
    row["verdicts"] = std::move(verdicts);
    json owners = json::array();
    for (int o : rec.allocation.owner) owners.push_back(o);
    row["owner"] = std::move(owners);
    rounds.push_back(std::move(row));
  }
  json j{{"rounds", std::move(rounds)}, {"cumulative", result.ledger.cumulative}};
  if (result.first_violation) j["first_violation"] = *result.first_violation;
  return j;
}

json certificate_json(const ForcedOwnershipCertificate& c, const std::string& digest) {
  json owners = json::array();
  for (int o : c.owners) owners.push_back(o);
  return json{{"round", c.round},
              {"block", c.prefix_len},
              {"owners", std::move(owners)},
              {"notion", to_string(c.notion)},
              {"instance_digest", digest},
              {"split_seen", c.split_seen},
              {"valid_count", c.valid_count},
              {"forced", c.forced()}};
}

struct CommonOpts {
  std::string instance_path;
  std::string out_path;
  std::string format = "csv";
  long long budget = kDefaultOracleBudget;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_instance) {
  auto* inst = cmd->add_option("--instance", o.instance_path, "instance JSON file");
  if (need_instance) inst->required();
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--budget", o.budget, "oracle enumeration budget");
  cmd->add_option("--seed", o.seed, "seed override for generator instances");
}

int cmd_run(const CommonOpts& o, const std::string& algo, const std::string& checks_csv,
            bool strict) {
  std::set<Notion> checks = parse_checks(checks_csv);
  ValuationProfile instance = load_instance(o.instance_path);
  auto allocator = make_allocator(algo);
  RunResult result = run_online(*allocator, instance, checks, strict);
  if (o.format == "json")
    emit(run_json(result, checks).dump(2) + "\n", o.out_path);
  else
    emit(run_csv(result, checks), o.out_path);
  if (strict && result.first_violation) {
    std::cerr << "fairness violation at round " << *result.first_violation << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_gen(const CommonOpts& o, const std::string& generator, const std::string& params_text) {
  ValuationProfile v = [&] {
    if (!generator.empty()) {
      json params = params_text.empty() ? json::object() : json::parse(params_text);
      return resolve_generator(generator, params, o.seed);
    }
    if (o.instance_path.empty())
      throw ContractViolation("gen needs --generator or an --instance spec to resolve");
    return load_instance(o.instance_path);
  }();
  emit(profile_to_json(v).dump(2) + "\n", o.out_path);
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& notion_name, std::size_t round_from,
               std::size_t round_to, std::size_t prefix_len, bool fixed_order, bool min_adjust,
               bool contiguous) {
  auto notion = notion_from_string(notion_name);
  if (!notion) throw ContractViolation("unknown fairness notion: " + notion_name);
  ValuationProfile instance = load_instance(o.instance_path);
  std::string digest = instance_digest(instance);

  if (min_adjust) {
    MinAdjustmentResult res =
        min_adjustment_schedule(instance, *notion, contiguous, fixed_order, o.budget);
    json j{{"notion", to_string(*notion)},
           {"instance_digest", digest},
           {"feasible", res.feasible},
           {"optimum", res.optimum}};
    if (!res.feasible) j["infeasible_round"] = res.infeasible_round;
    emit(j.dump(2) + "\n", o.out_path);
    return kExitOk;
  }

  if (round_to == 0) round_to = instance.items();
  if (round_from == 0) round_from = 1;
  if (round_from > round_to || round_to > instance.items())
    throw ContractViolation("verify: invalid round range");

  json certs = json::array();
  std::ostringstream csv;
  csv << "round,block,notion,owners,split_seen,valid_count,forced\n";
  for (std::size_t t = round_from; t <= round_to; ++t) {
    ForcedOwnershipCertificate c =
        certify_forced_block(instance.prefix(t), *notion, prefix_len, fixed_order, o.budget);
    c.round = t;
    certs.push_back(certificate_json(c, digest));
    csv << t << "," << c.prefix_len << "," << to_string(c.notion) << ",";
    bool first = true;
    for (int owner : c.owners) {
      csv << (first ? "" : ";") << owner;
      first = false;
    }
    if (c.owners.empty() && c.valid_count == 0) csv << "no-valid-allocation";
    csv << "," << (c.split_seen ? "true" : "false") << "," << c.valid_count << ","
        << (c.forced() ? "true" : "false") << "\n";
  }
  if (o.format == "json")
    emit(certs.dump(2) + "\n", o.out_path);
  else
    emit(csv.str(), o.out_path);
  return kExitOk;
}

int cmd_oracle(const CommonOpts& o, const std::string& notion_name, std::size_t round,
               std::size_t prefix_len, bool fixed_order) {
  auto notion = notion_from_string(notion_name);
  if (!notion) throw ContractViolation("unknown fairness notion: " + notion_name);
  ValuationProfile instance = load_instance(o.instance_path);
  if (round == 0 || round > instance.items())
    throw ContractViolation("oracle: --round out of range");
  ForcedOwnershipCertificate c =
      certify_forced_block(instance.prefix(round), *notion, prefix_len, fixed_order, o.budget);
  c.round = round;
  emit(certificate_json(c, instance_digest(instance)).dump(2) + "\n", o.out_path);
  return kExitOk;
}

struct BoundParams {
  long long n = 2;
  long long T = 0;   // rounds; defaults to the CSV row count
  long long m = 1;   // distinct per-agent values (layer-updating)
  long long R = 1, L = 1;
};

int cmd_bound_report(const CommonOpts& o, const std::string& run_csv_path,
                     const std::string& bound_name, BoundParams bp) {
  std::ifstream in(run_csv_path);
  if (!in) throw ContractViolation("cannot read run CSV: " + run_csv_path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,adjustments,cumulative", 0) != 0)
    throw ContractViolation("run CSV must start with the t,adjustments,cumulative header");
  long long cumulative = 0, rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string t, adj, cum;
    if (!std::getline(ss, t, ',') || !std::getline(ss, adj, ',') || !std::getline(ss, cum, ','))
      throw ContractViolation("malformed run CSV row: " + line);
    cumulative = std::stoll(cum);
    ++rows;
  }
  if (bp.T == 0) bp.T = rows;
  if (bp.L <= 0 && bound_name == "ef1-leximin-online")
    throw ContractViolation("bound-report: ef1-leximin-online needs L > 0");

  double bound = 0.0;
  bool hard = true;
  if (bound_name == "propa-pointer") {
    bound = static_cast<double>(bp.n - 1) * static_cast<double>(bp.T);
  } else if (bound_name == "layer-updating") {
    bound = static_cast<double>(bp.m) * static_cast<double>(bp.T);
  } else if (bound_name == "envy-balancing" || bound_name == "lumpy-tie") {
    bound = static_cast<double>(bp.T);
  } else if (bound_name == "ef1-leximin-online") {
    hard = false;  // soft ceiling: reported, never an error
    bound = static_cast<double>(bp.R) / static_cast<double>(bp.L) *
            static_cast<double>(bp.n) * static_cast<double>(bp.n) * static_cast<double>(bp.T) *
            5.0;
  } else if (bound_name == "greedy-restricted" || bound_name == "greedy-identical") {
    bound = 0.0;
  } else {
    throw ContractViolation("unknown bound name: " + bound_name);
  }

  double ratio = bound == 0.0 ? (cumulative == 0 ? 0.0 : std::numeric_limits<double>::infinity())
                              : static_cast<double>(cumulative) / bound;
  bool flagged = hard && ratio > 1.0;
  json j{{"bound", bound_name}, {"cumulative", cumulative}, {"rounds", rows},
         {"bound_value", bound}, {"ratio", ratio},        {"hard", hard},
         {"flagged", flagged}};
  if (o.format == "csv") {
    std::ostringstream os;
    os << "bound,cumulative,rounds,bound_value,ratio,hard,flagged\n"
       << bound_name << "," << cumulative << "," << rows << "," << bound << "," << ratio << ","
       << (hard ? "true" : "false") << "," << (flagged ? "true" : "false") << "\n";
    emit(os.str(), o.out_path);
  } else {
    emit(j.dump(2) + "\n", o.out_path);
  }
  if (flagged) {
    std::cerr << "hard bound exceeded: ratio " << ratio << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairalloc: streaming fair-allocation experiment harness"};
  app.require_subcommand(1);

  CommonOpts run_o, gen_o, verify_o, oracle_o, bound_o;

  auto* run = app.add_subcommand("run", "stream an instance through an online allocator");
  std::string algo, checks_csv;
  bool strict = false;
  run->add_option("--algo", algo, "allocator name")->required();
  run->add_option("--check", checks_csv, "comma-separated notions: ef,ef1,propa,eq1");
  run->add_flag("--strict", strict, "abort on the first fairness violation (exit 2)");
  add_common(run, run_o, true);

  auto* gen = app.add_subcommand("gen", "resolve a generator into a JSON instance");
  std::string generator, params_text;
  gen->add_option("--generator", generator, "generator name");
  gen->add_option("--params", params_text, "generator parameters as inline JSON");
  add_common(gen, gen_o, false);

  auto* verify = app.add_subcommand("verify", "certificates over a round range");
  std::string v_notion = "ef1";
  std::size_t v_from = 0, v_to = 0, v_prefix = 1;
  bool v_fixed = false, v_min_adjust = false, v_contig = true;
  verify->add_option("--notion", v_notion, "fairness notion");
  verify->add_option("--from", v_from, "first round (default 1)");
  verify->add_option("--to", v_to, "last round (default all)");
  verify->add_option("--prefix-len", v_prefix, "forced prefix length");
  verify->add_flag("--fixed-order", v_fixed, "agent i owns block i (identical setting)");
  verify->add_flag("--min-adjust", v_min_adjust, "minimum-adjustment schedule instead");
  verify->add_flag("--noncontiguous{false}", v_contig,
                   "enumerate noncontiguous assignments for --min-adjust");
  add_common(verify, verify_o, true);

  auto* oracle = app.add_subcommand("oracle", "single-round certificate as JSON");
  std::string o_notion = "ef1";
  std::size_t o_round = 0, o_prefix = 1;
  bool o_fixed = false;
  oracle->add_option("--notion", o_notion, "fairness notion");
  oracle->add_option("--round", o_round, "round to certify")->required();
  oracle->add_option("--prefix-len", o_prefix, "forced prefix length");
  oracle->add_flag("--fixed-order", o_fixed, "agent i owns block i (identical setting)");
  add_common(oracle, oracle_o, true);

  auto* bound = app.add_subcommand("bound-report", "adjustment ratio against a named bound");
  std::string run_csv_path, bound_name;
  BoundParams bp;
  bound->add_option("--in", run_csv_path, "run CSV file")->required();
  bound->add_option("--bound", bound_name, "bound name (usually the allocator name)")->required();
  bound->add_option("--n", bp.n, "number of agents");
  bound->add_option("--T", bp.T, "rounds (default: CSV row count)");
  bound->add_option("--m", bp.m, "max distinct per-agent values (layer-updating)");
  bound->add_option("--R", bp.R, "maximum item value (ef1-leximin-online)");
  bound->add_option("--L", bp.L, "minimum item value (ef1-leximin-online)");
  add_common(bound, bound_o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(run_o, algo, checks_csv, strict);
    if (gen->parsed()) return cmd_gen(gen_o, generator, params_text);
    if (verify->parsed())
      return cmd_verify(verify_o, v_notion, v_from, v_to, v_prefix, v_fixed, v_min_adjust,
                        v_contig);
    if (oracle->parsed()) return cmd_oracle(oracle_o, o_notion, o_round, o_prefix, o_fixed);
    if (bound->parsed()) return cmd_bound_report(bound_o, run_csv_path, bound_name, bp);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ContractViolation& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Unsupported& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
