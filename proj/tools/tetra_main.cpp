#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tetra/bell/teleport.hpp"
#include "tetra/cloning/challenge.hpp"
#include "tetra/cloning/search.hpp"
#include "tetra/core/enumerate.hpp"
#include "tetra/core/serialize.hpp"
#include "tetra/json.hpp"
#include "tetra/spacetime/audit.hpp"
#include "tetra/spacetime/serialize.hpp"

namespace {

using tetra::Json;
using tetra::Measurement;
using tetra::Rng;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

void emit(const Json& j, const std::string& output_path) {
  const std::string text = j.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + output_path);
  }
  out << text;
}

// The default preparation family for the cloning game: two overlapping
// two-block partitions, so no returned value can satisfy both hypotheses
// at once unless it is the shared one.
std::vector<Measurement> default_preparations() {
  return {
      Measurement::from_rows(1, {{{0}, {1}}, {{2}, {3}}}),
      Measurement::from_rows(1, {{{0}, {3}}, {{1}, {2}}}),
  };
}

const char* violation_text(tetra::Violation v) {
  switch (v) {
    case tetra::Violation::kNone:
      return "none";
    case tetra::Violation::kDuplicateRow:
      return "duplicate_row";
    case tetra::Violation::kSingleValuedColumn:
      return "single_valued_column";
    case tetra::Violation::kBelowQuarter:
      return "below_quarter";
    case tetra::Violation::kOverlappingSets:
      return "overlapping_sets";
    case tetra::Violation::kMissingState:
      return "missing_state";
  }
  return "unknown";
}

int cmd_validate(const std::string& path, const std::string& output) {
  const Measurement m = tetra::load_measurement_file(path);
  const tetra::ValidityReport report = tetra::validate_measurement(m);
  Json j;
  j["valid"] = report.ok;
  if (!report.ok) {
    j["violation"] = violation_text(report.violation);
    j["outcome"] = report.outcome;
    j["column"] = report.column;
    j["message"] = report.message;
  }
  emit(j, output);
  return report.ok ? kOk : kCheckFailed;
}

int cmd_teleport(std::uint64_t seed, long long trials, long long distance,
                 bool god_view, const std::string& output) {
  tetra::bell::TeleportOptions options;
  options.distance = distance;
  const Rng root(seed);
  if (trials == 1) {
    Rng run_rng = root.derive(0);
    const int x = static_cast<int>(run_rng.below(4));
    const tetra::bell::TeleportationTranscript t =
        tetra::bell::teleport_run(x, run_rng, options);
    emit(tetra::bell::transcript_to_json(t, god_view), output);
    return kOk;
  }
  const tetra::bell::TeleportStats stats =
      tetra::bell::teleport_stats(trials, root, options);
  emit(tetra::bell::stats_to_json(stats), output);
  return kOk;
}

int cmd_clone(const std::string& strategy_path, std::uint64_t seed,
              long long trials, int particles, const std::string& output) {
  const tetra::cloning::Strategy strategy =
      strategy_path.empty() ? tetra::cloning::null_strategy()
                            : tetra::cloning::load_strategy_file(strategy_path);
  tetra::cloning::ChallengeOptions options;
  options.num_particles = particles;
  const tetra::cloning::ChallengeResult result = tetra::cloning::run_challenge(
      strategy, default_preparations(), trials, Rng(seed), options);
  Json j = tetra::cloning::challenge_to_json(result);
  j["strategy"] = tetra::cloning::strategy_to_json(strategy);
  emit(j, output);
  return kOk;
}

int cmd_clone_search(int particles, int depth, long long budget,
                     const std::string& output) {
  tetra::cloning::SearchOptions options;
  options.node_budget = budget;
  const tetra::cloning::SearchResult result =
      tetra::cloning::search_strategies(
          particles, depth, tetra::cloning::default_catalog(particles),
          default_preparations(), options);
  const bool excluded =
      result.max_pass_probability < tetra::Rational::from_int(1);
  Json j;
  j["num_particles"] = particles;
  j["depth"] = depth;
  j["max_pass_probability"] = result.max_pass_probability.to_string();
  j["max_pass_probability_float"] = result.max_pass_probability.to_double();
  j["nodes_explored"] = result.nodes_explored;
  j["perfect_cloning_excluded"] = excluded;
  j["strategy"] = tetra::cloning::strategy_to_json(result.best);
  emit(j, output);
  return excluded ? kOk : kCheckFailed;
}

int cmd_enumerate(int particles, const std::string& output) {
  if (particles != 1) {
    std::cerr << "enumerate: only one-particle enumeration is supported\n";
    return kUsageError;
  }
  Json j = Json::array();
  for (const Measurement& m : tetra::enumerate_valid_measurements(1)) {
    j.push_back(tetra::measurement_to_json(m));
  }
  emit(j, output);
  return kOk;
}

int cmd_audit(const std::string& path, const std::string& output) {
  const tetra::spacetime::WorldLog log = tetra::spacetime::load_log_file(path);
  const tetra::spacetime::AuditReport report =
      tetra::spacetime::audit_locality(log);
  Json j;
  j["ok"] = report.ok;
  j["events"] = log.size();
  if (!report.ok) {
    j["event_index"] = report.event_index;
    j["message"] = report.message;
  }
  emit(j, output);
  return report.ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for a four-valued local hidden-variable model"};
  app.require_subcommand(1);

  CLI::App* validate =
      app.add_subcommand("validate", "check a measurement file");
  std::string validate_path;
  std::string validate_output;
  validate->add_option("file", validate_path, "measurement JSON file")
      ->required();
  validate->add_option("--output", validate_output,
                       "write the report to a file");

  CLI::App* teleport = app.add_subcommand(
      "teleport", "run the state-transfer protocol (one transcript, or "
                  "batch statistics with --trials > 1)");
  std::uint64_t teleport_seed = 0;
  long long teleport_trials = 1;
  long long teleport_distance = 10;
  bool teleport_god_view = false;
  std::string teleport_output;
  teleport->add_option("--seed", teleport_seed, "rng seed");
  teleport->add_option("--trials", teleport_trials, "number of runs")
      ->check(CLI::Range(1ll, 100'000'000ll));
  teleport->add_option("--distance", teleport_distance,
                       "Alice-Bob separation")
      ->check(CLI::Range(0ll, 1'000'000ll));
  teleport->add_flag("--god-view", teleport_god_view,
                     "include hidden values in the transcript");
  teleport->add_option("--output", teleport_output, "write JSON to a file");

  CLI::App* clone = app.add_subcommand("clone", "run the cloning challenge");
  std::string clone_strategy;
  std::uint64_t clone_seed = 0;
  long long clone_trials = 10'000;
  int clone_particles = 2;
  std::string clone_output;
  clone->add_option("--strategy", clone_strategy,
                    "strategy JSON file (default: hand back particles 1,2)");
  clone->add_option("--seed", clone_seed, "rng seed");
  clone->add_option("--trials", clone_trials, "number of trials")
      ->check(CLI::Range(1ll, 100'000'000ll));
  clone->add_option("--particles", clone_particles,
                    "particles the adversary holds")
      ->check(CLI::Range(2, 8));
  clone->add_option("--output", clone_output, "write JSON to a file");

  CLI::App* clone_search = app.add_subcommand(
      "clone-search",
      "exhaustively search adversary strategies (exact, no sampling)");
  int search_particles = 2;
  int search_depth = 2;
  long long search_budget = 1'000'000;
  std::string search_output;
  clone_search->add_option("--particles", search_particles,
                           "particles the adversary holds")
      ->check(CLI::Range(2, 3));
  clone_search->add_option("--depth", search_depth, "decision-tree depth cap")
      ->check(CLI::Range(0, 2));
  clone_search->add_option("--budget", search_budget,
                           "node evaluation budget")
      ->check(CLI::Range(1ll, 1'000'000'000ll));
  clone_search->add_option("--output", search_output, "write JSON to a file");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list all valid measurements");
  int enumerate_particles = 1;
  std::string enumerate_output;
  enumerate->add_option("particles", enumerate_particles,
                        "system size (only 1)");
  enumerate->add_option("--output", enumerate_output,
                        "write JSON to a file");

  CLI::App* audit =
      app.add_subcommand("audit", "check an event log for locality");
  std::string audit_path;
  std::string audit_output;
  audit->add_option("file", audit_path, "event log JSON file")->required();
  audit->add_option("--output", audit_output, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (app.got_subcommand(validate)) {
      return cmd_validate(validate_path, validate_output);
    }
    if (app.got_subcommand(teleport)) {
      return cmd_teleport(teleport_seed, teleport_trials, teleport_distance,
                          teleport_god_view, teleport_output);
    }
    if (app.got_subcommand(clone)) {
      return cmd_clone(clone_strategy, clone_seed, clone_trials,
                       clone_particles, clone_output);
    }
    if (app.got_subcommand(clone_search)) {
      return cmd_clone_search(search_particles, search_depth, search_budget,
                              search_output);
    }
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(enumerate_particles, enumerate_output);
    }
    if (app.got_subcommand(audit)) {
      return cmd_audit(audit_path, audit_output);
    }
  } catch (const tetra::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
