// verify: run the identity suites, congruence scans, and series evaluations
// from the command line. Exit codes: 0 all pass, 1 at least one mathematical
// failure or skip, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactlab/congruences.hpp"
#include "exactlab/identities.hpp"
#include "exactlab/parallel.hpp"
#include "exactlab/report.hpp"
#include "exactlab/series.hpp"

namespace {

using namespace exactlab;

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eedf00d;
  bool inject_fault = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_fault) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("VERIFY_FORMAT");
  cmd->add_option("--out", opt.out_path, "Write the report to a file instead of stdout")
      ->envname("VERIFY_OUT");
  cmd->add_option("--jobs", opt.jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->envname("VERIFY_JOBS");
  cmd->add_option("--seed", opt.seed, "Seed for deterministic sample choices")
      ->envname("VERIFY_SEED");
  if (with_fault)
    cmd->add_flag("--inject-fault", opt.inject_fault,
                  "Testing aid: perturb one value so the suite must report a failure");
}

int emit(VerificationReport& report, const CommonOptions& opt,
         std::chrono::steady_clock::time_point started) {
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  std::string body;
  if (opt.format == "json") body = to_json(report);
  else if (opt.format == "csv") body = to_csv(report);
  else body = to_text(report);

  if (opt.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      return 2;
    }
    f << body;
  }
  const Summary s = report.summary();
  return (s.fail == 0 && s.skipped == 0) ? 0 : 1;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

int run_identities(const std::vector<std::string>& ids, std::optional<std::uint64_t> n_max,
                   const CommonOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::string> selected = ids;
  if (selected.empty())
    for (const auto& e : identity_registry()) selected.push_back(e.id);
  for (const auto& id : selected)
    if (!is_identity_id(id)) {
      std::string valid;
      for (const auto& e : identity_registry()) valid += (valid.empty() ? "" : ", ") + e.id;
      std::cerr << "error: unknown identity id '" << id << "'; valid ids: " << valid << "\n";
      return 2;
    }

  VerificationReport report;
  report.config = {{"subcommand", "identities"},
                   {"ids", join(selected)},
                   {"n_max", n_max ? std::to_string(*n_max) : "default"},
                   {"seed", std::to_string(opt.seed)},
                   {"inject_fault", opt.inject_fault ? "true" : "false"}};

  std::vector<IdentityOutcome> outcomes(selected.size());
  std::optional<std::size_t> window;
  if (n_max) window = static_cast<std::size_t>(*n_max);
  parallel_for(selected.size(), opt.jobs, [&](std::size_t i) {
    outcomes[i] = run_identity(selected[i], window, opt.inject_fault);
  });
  for (const auto& outcome : outcomes)
    for (const auto& c : outcome.cases) report.add(to_record(c));
  return emit(report, opt, started);
}

int run_congruences(const std::vector<std::string>& ids, std::uint64_t p_min, std::uint64_t p_max,
                    std::uint64_t o2_ceiling, const std::string& bpath, const CommonOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  if (p_min > p_max) {
    std::cerr << "error: --p-min must be <= --p-max\n";
    return 2;
  }
  std::vector<std::string> selected = ids;
  if (selected.empty())
    for (const auto& e : congruence_registry()) selected.push_back(e.id);
  for (const auto& id : selected)
    if (!is_congruence_id(id)) {
      std::string valid;
      for (const auto& e : congruence_registry()) valid += (valid.empty() ? "" : ", ") + e.id;
      std::cerr << "error: unknown congruence check id '" << id << "'; valid ids: " << valid
                << "\n";
      return 2;
    }

  ScanOptions scan_opt;
  scan_opt.o2_ceiling = o2_ceiling;
  scan_opt.seed = opt.seed;
  scan_opt.bpath = bpath == "table" ? BernoulliPath::Table : BernoulliPath::Fast;
  scan_opt.inject_fault = opt.inject_fault;

  VerificationReport report;
  report.config = {{"subcommand", "congruences"},
                   {"ids", join(selected)},
                   {"p_min", std::to_string(p_min)},
                   {"p_max", std::to_string(p_max)},
                   {"o2_ceiling", std::to_string(o2_ceiling)},
                   {"bpath", bpath},
                   {"seed", std::to_string(opt.seed)},
                   {"inject_fault", opt.inject_fault ? "true" : "false"}};

  const ScanResult result = scan(selected, p_min, p_max, scan_opt, opt.jobs);
  if (!result.capped_checks.empty())
    report.config.emplace_back("o2_capped_checks", join(result.capped_checks));
  for (const auto& c : result.cases) report.add(to_record(c));
  if (result.cases.empty())
    report.config.emplace_back("note", "no primes >= 5 in the requested range");
  return emit(report, opt, started);
}

int run_series(const std::vector<std::string>& ids, std::optional<std::uint64_t> terms, int digits,
               const CommonOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::string> selected = ids;
  if (selected.empty()) selected = {"a1", "aa1"};
  for (const auto& id : selected)
    if (id != "a1" && id != "aa1") {
      std::cerr << "error: unknown series id '" << id << "'; valid ids: a1, aa1\n";
      return 2;
    }

  VerificationReport report;
  report.config = {{"subcommand", "series"},
                   {"ids", join(selected)},
                   {"digits", std::to_string(digits)},
                   {"terms", terms ? std::to_string(*terms) : "auto"},
                   {"seed", std::to_string(opt.seed)}};

  std::vector<SeriesEvaluation> evals(selected.size());
  parallel_for(selected.size(), opt.jobs, [&](std::size_t i) {
    const SeriesId id = selected[i] == "a1" ? SeriesId::A1 : SeriesId::Aa1;
    const std::size_t k = terms ? static_cast<std::size_t>(*terms) : default_terms(id, digits);
    evals[i] = eval_series(id, k, digits);
  });
  for (const auto& ev : evals) report.add(to_record(ev));
  return emit(report, opt, started);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactlab verification front end"};
  app.set_config("--config", "", "INI file with per-subcommand sections; flags win")
      ->envname("VERIFY_CONFIG");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonOptions id_common, cg_common, se_common;
  std::vector<std::string> id_ids, cg_ids, se_ids;
  std::optional<std::uint64_t> n_max, terms;
  std::uint64_t p_min = 5, p_max = 1000, o2_ceiling = 500;
  std::string bpath = "fast";
  int digits = 30;

  auto* identities = app.add_subcommand("identities", "Run exact identity suites");
  identities->add_option("--id", id_ids, "Identity IDs (repeatable; default: all)")
      ->envname("VERIFY_IDENTITY_IDS");
  identities->add_option("--n-max", n_max, "Override the per-identity window")
      ->envname("VERIFY_N_MAX");
  add_common(identities, id_common, true);

  auto* congruences = app.add_subcommand("congruences", "Scan the congruence registry");
  congruences->add_option("--id", cg_ids, "Check IDs (repeatable; default: all)")
      ->envname("VERIFY_CONGRUENCE_IDS");
  congruences->add_option("--p-min", p_min, "Smallest prime (floor 5)")->envname("VERIFY_P_MIN");
  congruences->add_option("--p-max", p_max, "Largest prime")->envname("VERIFY_P_MAX");
  congruences->add_option("--o2-ceiling", o2_ceiling, "Cap for O(p^2)-class checks")
      ->envname("VERIFY_O2_CEILING");
  congruences->add_option("--bpath", bpath, "B_{p-2}(1/3) path for check RHS values")
      ->check(CLI::IsMember({"fast", "table"}))
      ->envname("VERIFY_BPATH");
  add_common(congruences, cg_common, true);

  auto* series = app.add_subcommand("series", "Evaluate the pi^2/18 series with tail bounds");
  series->add_option("--id", se_ids, "Series IDs (repeatable; default: a1 and aa1)")
      ->envname("VERIFY_SERIES_IDS");
  series->add_option("--terms", terms, "Partial-sum length (default: from the tail-bound rule)")
      ->envname("VERIFY_TERMS");
  series->add_option("--digits", digits, "Reference precision in decimal digits")
      ->check(CLI::Range(1, 200))
      ->envname("VERIFY_DIGITS");
  add_common(series, se_common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (identities->parsed()) return run_identities(id_ids, n_max, id_common);
    if (congruences->parsed()) return run_congruences(cg_ids, p_min, p_max, o2_ceiling, bpath, cg_common);
    return run_series(se_ids, terms, digits, se_common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
