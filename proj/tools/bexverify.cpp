// Command-line driver for the verification suites.
//
// Exit codes: 0 all assertions pass, 1 assertion failure (failing witness
// serialized in the report), 2 malformed configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bex/condexp.hpp"
#include "bex/json_io.hpp"
#include "bex/limits.hpp"
#include "bex/operator.hpp"
#include "bex/suites.hpp"

using nlohmann::json;

namespace {

void emit(const json& report, const std::vector<bex::CheckResult>& checks,
          const std::string& out_path, const std::string& format) {
  std::string payload =
      format == "csv" ? bex::report_csv(checks) : report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path);
    f << payload;
  }
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw bex::ConfigError(path, "cannot open config file");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw bex::ConfigError(path, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

int run_verify(const std::string& what, std::uint64_t seed, int trials,
               const std::string& config_path, const std::string& out_path,
               const std::string& format) {
  std::set<std::string> suites;
  bool inject_failure = false;
  if (what == "all")
    suites = {"extension", "sqfn", "condexp", "counterexample", "norms"};
  else
    suites = {what};

  if (!config_path.empty()) {
    json cfg = load_config(config_path);
    if (cfg.contains("seed")) {
      if (!cfg["seed"].is_number_unsigned()) throw bex::ConfigError("seed", "expected an unsigned integer");
      seed = cfg["seed"].get<std::uint64_t>();
    }
    if (cfg.contains("trials")) {
      if (!cfg["trials"].is_number_integer() || cfg["trials"].get<long>() < 1)
        throw bex::ConfigError("trials", "expected a positive integer");
      trials = cfg["trials"].get<int>();
    }
    if (cfg.contains("suites")) {
      if (!cfg["suites"].is_array()) throw bex::ConfigError("suites", "expected an array of suite names");
      suites.clear();
      for (const auto& s : cfg["suites"]) {
        if (!s.is_string()) throw bex::ConfigError("suites", "expected an array of suite names");
        suites.insert(s.get<std::string>());
      }
    }
    if (cfg.contains("inject_failure")) {
      if (!cfg["inject_failure"].is_boolean())
        throw bex::ConfigError("inject_failure", "expected a boolean");
      inject_failure = cfg["inject_failure"].get<bool>();
    }
  }
  for (const auto& s : suites)
    if (s != "extension" && s != "sqfn" && s != "condexp" && s != "counterexample" && s != "norms")
      throw bex::ConfigError("suites", "unknown suite '" + s + "'");

  std::vector<bex::CheckResult> checks;
  auto append = [&checks](std::vector<bex::CheckResult> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (suites.count("norms")) append(bex::run_norms_suite());
  if (suites.count("extension")) append(bex::run_extension_suite(seed, trials, inject_failure));
  if (suites.count("sqfn")) append(bex::run_sqfn_suite(seed, trials));
  if (suites.count("condexp")) append(bex::run_condexp_suite(seed, trials));
  if (suites.count("counterexample")) append(bex::run_counterexample_suite());

  emit(bex::report_json(checks, seed, trials), checks, out_path, format);
  return bex::all_pass(checks) ? 0 : 1;
}

int run_condexp_scenario(const std::string& config_path, const std::string& out_path,
                         const std::string& format) {
  json cfg = load_config(config_path);
  bex::MeasureSpace space = bex::measure_space_from_json(cfg);
  bex::Partition P = bex::partition_from_json(cfg, space);
  if (!cfg.contains("Y")) throw bex::ConfigError("Y", "missing");
  bex::FiniteBanachSpace Y = bex::banach_space_from_json(cfg["Y"]);
  int trials = 100;
  std::uint64_t seed = 42;
  if (cfg.contains("trials")) {
    if (!cfg["trials"].is_number_integer() || cfg["trials"].get<long>() < 1)
      throw bex::ConfigError("trials", "expected a positive integer");
    trials = cfg["trials"].get<int>();
  }
  if (cfg.contains("seed")) {
    if (!cfg["seed"].is_number_unsigned())
      throw bex::ConfigError("seed", "expected an unsigned integer");
    seed = cfg["seed"].get<std::uint64_t>();
  }
  bex::DualPair XY = bex::DualPair::identity_pair(
      bex::FiniteBanachSpace(Y.dim(), bex::conjugate_exponent(Y.p())), Y);
  auto rep = bex::verify_condexp_properties(space, P, Y, XY, trials, seed);
  std::vector<bex::CheckResult> checks;
  auto add = [&](const char* name, double v, double bound) {
    bex::CheckResult c;
    c.suite = name;
    c.instances = trials;
    c.max_residual = v;
    c.bound = bound;
    c.pass = v <= bound;
    checks.push_back(c);
  };
  add("condexp.averaging", rep.averaging_residual, 1e-12);
  add("condexp.idempotence", rep.idempotence_defect, 1e-12);
  add("condexp.contraction", rep.contraction_slack, 1e-10);
  add("condexp.duality", rep.duality_residual, 1e-10);
  add("condexp.tower", rep.tower_defect, 1e-12);
  emit(bex::report_json(checks, seed, trials), checks, out_path, format);
  return rep.pass ? 0 : 1;
}

int run_counterexample(const std::string& space, std::size_t N, std::size_t K,
                       const std::string& out_path, const std::string& format) {
  json diag;
  if (space == "c0") {
    auto d = bex::c0_counterexample(N, K);
    diag = {{"space", "c0"}, {"N", N}, {"K", K}, {"values", d.values}, {"min_head", d.min_head}};
  } else if (space == "l1") {
    auto d = bex::l1_counterexample(N, K);
    diag = {{"space", "l1"},       {"N", N},
            {"K", K},              {"head_mass", d.head_mass},
            {"total_pairing", d.total_pairing}, {"gap", d.gap}};
  } else {
    throw bex::ConfigError("space", "expected c0 or l1");
  }
  std::string payload;
  if (format == "csv") {
    payload = "key,value\n";
    for (auto& [k, v] : diag.items())
      if (v.is_number()) payload += k + "," + v.dump() + "\n";
  } else {
    payload = diag.dump(2) + "\n";
  }
  if (out_path.empty())
    std::cout << payload;
  else
    std::ofstream(out_path) << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for vector-valued operator extension on finite measure spaces"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  int trials = 10000;
  std::string config_path, out_path, format = "json";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "master RNG seed");
    cmd->add_option("--trials", trials, "randomized trials per suite");
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_path, "report output path (default stdout)");
    cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string what = "all";
  verify->add_option("what", what, "all|extension|sqfn|condexp|counterexample|norms")
      ->check(CLI::IsMember({"all", "extension", "sqfn", "condexp", "counterexample", "norms"}));
  add_common(verify);

  auto* norms = app.add_subcommand("norms", "exact operator-norm fixtures");
  norms->add_option("--out", out_path, "report output path");
  norms->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* cex = app.add_subcommand("counterexample", "Banach-limit extension failure diagnostics");
  std::string cex_space = "c0";
  std::size_t N = 10000, K = 100;
  cex->add_option("--space", cex_space, "c0|l1")->check(CLI::IsMember({"c0", "l1"}));
  cex->add_option("--N", N, "Cesaro window length");
  cex->add_option("--K", K, "head length");
  cex->add_option("--out", out_path, "output path");
  cex->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* ce = app.add_subcommand("condexp", "conditional-expectation scenario");
  ce->add_option("--config", config_path, "scenario JSON")->required();
  ce->add_option("--out", out_path, "report output path");
  ce->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return run_verify(what, seed, trials, config_path, out_path, format);
    if (app.got_subcommand(norms)) {
      auto checks = bex::run_norms_suite();
      emit(bex::report_json(checks, seed, 0), checks, out_path, format);
      return bex::all_pass(checks) ? 0 : 1;
    }
    if (app.got_subcommand(cex)) return run_counterexample(cex_space, N, K, out_path, format);
    if (app.got_subcommand(ce)) return run_condexp_scenario(config_path, out_path, format);
  } catch (const bex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
