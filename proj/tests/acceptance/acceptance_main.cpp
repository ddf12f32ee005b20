// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Statistical tolerances are the fixed ones from tetra/stats.hpp:
// chi-square at significance 0.001, binomial consistency at z = 2.5758.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tetra/bell/bell.hpp"
#include "tetra/bell/teleport.hpp"
#include "tetra/cloning/certificate.hpp"
#include "tetra/cloning/challenge.hpp"
#include "tetra/cloning/search.hpp"
#include "tetra/cloning/strategy.hpp"
#include "tetra/core/enumerate.hpp"
#include "tetra/core/measurement.hpp"
#include "tetra/core/mixture.hpp"
#include "tetra/core/serialize.hpp"
#include "tetra/rational.hpp"
#include "tetra/rng.hpp"
#include "tetra/spacetime/audit.hpp"
#include "tetra/spacetime/log.hpp"
#include "tetra/stats.hpp"

using namespace tetra;

namespace {

struct Gate {
  int failures = 0;

  void report(int number, const std::string& name, bool ok,
              const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

// Transcript logs from the protocol criteria, re-checked by the audit
// criterion below.
struct AuditPool {
  long long audited = 0;
  long long clean = 0;

  void add(const spacetime::WorldLog& log) {
    ++audited;
    if (spacetime::audit_locality(log).ok) ++clean;
  }
};

std::vector<Measurement> preparations() {
  return {Measurement::from_rows(1, {{{0}, {1}}, {{2}, {3}}}),
          Measurement::from_rows(1, {{{0}, {3}}, {{1}, {2}}})};
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Every set partition of {0,1,2,3}, built independently of the library's
// enumeration (restricted growth strings).
std::vector<std::vector<std::vector<int>>> partition_oracle() {
  std::vector<std::vector<std::vector<int>>> out;
  std::array<int, 4> assign{};
  const auto rec = [&](auto&& self, int index, int used) -> void {
    if (index == 4) {
      std::vector<std::vector<int>> partition(used);
      for (int v = 0; v < 4; ++v) partition[assign[v]].push_back(v);
      out.push_back(partition);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      assign[index] = b;
      self(self, index + 1, b == used ? used + 1 : used);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_command(const std::string& command) {
  return std::system(command.c_str());
}

}  // namespace

int main() {
  Gate gate;
  AuditPool pool;

  // 1. Teleportation always reproduces the input value.
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int input = 0; input < 4 && ok; ++input) {
      for (int pair_value = 0; pair_value < 4 && ok; ++pair_value) {
        for (int seed = 0; seed < 100; ++seed) {
          Rng rng(static_cast<std::uint64_t>(seed) * 61 + 16 * input +
                  pair_value + 1);
          bell::TeleportOptions options;
          options.forced_pair_value = pair_value;
          const auto t = bell::teleport_run(input, rng, options);
          pool.add(t.log);
          if (!t.success || t.output_value != input) {
            ok = false;
            detail = "value " + std::to_string(input) + " came out as " +
                     std::to_string(t.output_value);
            break;
          }
        }
      }
    }
    Rng batch(2024);
    const auto stats = bell::teleport_stats(10000, batch);
    if (stats.successes != stats.trials) {
      ok = false;
      detail = std::to_string(stats.trials - stats.successes) +
               " of 10000 batch trials failed";
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
      ok = false;
      detail = "too slow: " + std::to_string(elapsed) + "s";
    }
    if (ok) {
      detail = "1600 exhaustive runs + 10000 batch trials, success rate 1";
    }
    gate.report(1, "teleportation reproduces every input exactly", ok,
                detail);
  }

  // 2. The joint measurement leaves the sender's particles uniformly
  //    random within the observed outcome.
  {
    bool ok = true;
    std::array<long long, 4> particle1{};
    std::array<std::array<long long, 4>, 4> rows_by_outcome{};
    const Rng root(777);
    for (int i = 0; i < 10000; ++i) {
      Rng rng = root.derive(i);
      const auto t = bell::teleport_run(static_cast<int>(i % 4), rng);
      pool.add(t.log);
      ++particle1[t.alice_pair_post[0]];
      // Within outcome r the four rows are (a, a - r); index rows by a.
      ++rows_by_outcome[t.alice_outcome][t.alice_pair_post[0]];
    }
    std::string detail;
    const ChiSquareResult marginal = chi_square_uniform(particle1);
    if (!marginal.pass) {
      ok = false;
      detail = "marginal chi-square " + std::to_string(marginal.statistic);
    }
    for (int r = 0; r < 4 && ok; ++r) {
      const ChiSquareResult by_row = chi_square_uniform(rows_by_outcome[r]);
      if (!by_row.pass) {
        ok = false;
        detail = "conditional chi-square " +
                 std::to_string(by_row.statistic) + " for outcome " +
                 std::to_string(r);
      }
    }
    if (ok) {
      detail = "marginal and four conditional chi-squares at 0.001";
    }
    gate.report(2, "measuring for teleportation randomizes the sender side",
                ok, detail);
  }

  // 3. No strategy clones: exhaustive search stays below certainty, the
  //    failure certificate floor holds, and observed branch failures
  //    match the certificate.
  {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    const auto search = cloning::search_strategies(
        2, 2, cloning::default_catalog(2), preparations());
    if (!(search.max_pass_probability < Rational(1, 1))) {
      ok = false;
      detail = "search reached certainty";
    }

    // Certificate floor across fixed, bundled, and sampled outcome sets.
    std::vector<OutcomeSet> sets;
    for (const OutcomeSet& set : bell::bell_measurement().outcome_sets) {
      sets.push_back(set);
    }
    for (const char* name :
         {"/partition_01_23.json", "/partition_12_30.json",
          "/partition_03_12.json", "/bell.json"}) {
      const Measurement m =
          load_measurement_file(std::string(TETRA_DATA_DIR) + name);
      for (const OutcomeSet& set : m.outcome_sets) sets.push_back(set);
    }
    Rng sampler(31337);
    for (int n = 2; n <= 4; ++n) {
      for (int i = 0; i < 400; ++i) {
        sets.push_back(cloning::sample_valid_outcome_set(n, sampler));
      }
    }
    long long floor_checks = 0;
    for (const OutcomeSet& set : sets) {
      if (!ok) break;
      const int width = static_cast<int>(set.rows.front().particle_count());
      for (int n1 = 0; n1 < width && ok; ++n1) {
        for (int n2 = 0; n2 < width && ok; ++n2) {
          if (n1 == n2) continue;
          for (int v = 0; v < 4; ++v) {
            bool reachable = false;
            for (const SystemState& row : set.rows) {
              if (row.value(n1) == v && row.value(n2) == v) {
                reachable = true;
                break;
              }
            }
            if (!reachable) continue;
            ++floor_checks;
            const Rational cert =
                cloning::failure_certificate(set, {n1, n2}, v);
            if (cert < Rational(1, 4)) {
              ok = false;
              detail = "certificate " + cert.to_string() +
                       " fell below 1/4";
              break;
            }
          }
        }
      }
    }
    if (ok && floor_checks < 1000) {
      ok = false;
      detail = "only " + std::to_string(floor_checks) + " floor checks ran";
    }

    // Observed failure fractions per branch of a measure-then-return
    // strategy, against the exact certificate.
    if (ok) {
      const Measurement b = bell::bell_measurement();
      cloning::MeasureStep step;
      step.targets = {0, 1};
      step.measurement = b;
      for (int r = 0; r < 4; ++r) {
        auto leaf = std::make_shared<cloning::StrategyNode>();
        leaf->body = cloning::LeafReturn{0, 1};
        step.children.push_back(leaf);
      }
      auto root = std::make_shared<cloning::StrategyNode>();
      root->body = step;
      const cloning::Strategy strategy{root};

      cloning::ChallengeOptions options;
      options.log_sink = [&](const spacetime::WorldLog& log) {
        pool.add(log);
      };
      Rng rng(4242);
      const auto result = cloning::run_challenge(strategy, preparations(),
                                                 10000, rng, options);
      for (const auto& branch : result.branches) {
        const int r = branch.path.at(0);
        for (int v = 0; v < 4 && ok; ++v) {
          const Rational cert =
              cloning::failure_certificate(b.outcome_sets[r], {0, 1}, v);
          long long differing = 0;
          for (int a = 0; a < 4; ++a) {
            for (int c = 0; c < 4; ++c) {
              if (a == v && c == v) continue;
              differing += branch.pair_counts[a][c];
            }
          }
          const bool matches =
              cert == Rational(1, 1)
                  ? differing == branch.reached
                  : binomial_consistent(differing, branch.reached,
                                        cert.to_double());
          if (!matches) {
            ok = false;
            detail = "branch " + std::to_string(r) + " missed certificate " +
                     cert.to_string();
          }
        }
      }
    }

    const double elapsed = seconds_since(start);
    if (ok && elapsed >= 60.0) {
      ok = false;
      detail = "too slow: " + std::to_string(elapsed) + "s";
    }
    if (ok) {
      detail = "exact maximum " + search.max_pass_probability.to_string() +
               ", " + std::to_string(floor_checks) + " certificate floors";
    }
    gate.report(3, "cloning never succeeds with certainty", ok, detail);
  }

  // 4. Validation accepts exactly the lawful measurements and names the
  //    rule each corrupted variant breaks.
  {
    bool ok = true;
    std::string detail;

    std::set<std::vector<std::vector<int>>> oracle;
    for (auto partition : partition_oracle()) {
      bool lawful = true;
      for (const auto& block : partition) {
        if (block.size() < 2) lawful = false;
      }
      if (!lawful) continue;
      for (auto& block : partition) std::sort(block.begin(), block.end());
      std::sort(partition.begin(), partition.end());
      oracle.insert(partition);
    }
    if (partition_oracle().size() != 15 || oracle.size() != 4) {
      ok = false;
      detail = "partition oracle broke";
    }

    const auto enumerated = enumerate_valid_measurements(1);
    std::set<std::vector<std::vector<int>>> got;
    for (const Measurement& m : enumerated) {
      if (!validate_measurement(m).ok) ok = false;
      std::vector<std::vector<int>> blocks;
      for (const OutcomeSet& set : m.outcome_sets) {
        std::vector<int> block;
        for (const SystemState& row : set.rows) {
          block.push_back(row.value(0));
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(block);
      }
      std::sort(blocks.begin(), blocks.end());
      got.insert(blocks);
    }
    if (enumerated.size() != 4 || got != oracle) {
      ok = false;
      detail = "enumeration disagrees with the partition oracle";
    }

    if (!validate_measurement(bell::bell_measurement()).ok ||
        !validate_measurement(
             Measurement::from_rows(1, {{{0}, {1}}, {{2}, {3}}}))
             .ok ||
        !validate_measurement(
             Measurement::from_rows(1, {{{1}, {2}}, {{3}, {0}}}))
             .ok) {
      ok = false;
      detail = "a lawful measurement was rejected";
    }

    const auto expect = [&](const Measurement& m, Violation wanted,
                            const char* label) {
      const ValidityReport report = validate_measurement(m);
      if (report.ok || report.violation != wanted) {
        ok = false;
        detail = std::string("corruption not named: ") + label;
      }
    };
    expect(Measurement::from_rows(1, {{{0}, {1}, {1}}, {{2}, {3}}}),
           Violation::kDuplicateRow, "duplicate row");
    expect(Measurement::from_rows(1, {{{0}, {1}, {2}}, {{3}}}),
           Violation::kSingleValuedColumn, "singleton outcome");
    expect(Measurement::from_rows(
               2, {{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 2}, {1, 3}, {2, 0},
                    {3, 2}},
                   {{0, 1}, {1, 0}, {2, 1}, {3, 0}, {0, 3}, {1, 2}, {2, 3},
                    {3, 1}}}),
           Violation::kBelowQuarter, "scarce column value");
    expect(Measurement::from_rows(1, {{{0}, {1}}}),
           Violation::kMissingState, "missing states");

    if (ok) {
      detail = "4 of 15 partitions lawful; all four corruptions named";
    }
    gate.report(4, "validation accepts lawful measurements and names faults",
                ok, detail);
  }

  // 5. Immediate re-measurement always repeats the outcome.
  {
    bool ok = true;
    std::string detail;
    Rng rng(90210);
    const auto singles = enumerate_valid_measurements(1);
    for (int i = 0; i < 1000; ++i) {
      Measurement m;
      SystemState x{0};
      if (i % 2 == 0) {
        m = singles[rng.below(4)];
        x = SystemState{static_cast<int>(rng.below(4))};
      } else {
        m = bell::random_pair_measurement(rng);
        x = SystemState::decode(rng.below(16), 2);
      }
      const MeasureResult first = measure(m, x, rng);
      const MeasureResult second = measure(m, first.post_state, rng);
      if (second.outcome != first.outcome) {
        ok = false;
        detail = "trial " + std::to_string(i) + " changed its outcome";
        break;
      }
    }
    if (ok) detail = "1000 random measurement/state/seed triples";
    gate.report(5, "repeating a measurement repeats its outcome", ok,
                detail);
  }

  // 6. Retrodiction and the post-measurement posterior disagree exactly
  //    as the update rules dictate.
  {
    const Mixture prior({{SystemState{0}, Rational(1, 2)},
                         {SystemState{1}, Rational(1, 2)}});
    const Measurement shifted =
        Measurement::from_rows(1, {{{1}, {2}}, {{3}, {0}}});
    const bool ok =
        retrodict(prior, shifted, 0) == Mixture::point(SystemState{1}) &&
        posterior_mixture(shifted, 0) ==
            Mixture({{SystemState{1}, Rational(1, 2)},
                     {SystemState{2}, Rational(1, 2)}});
    gate.report(6, "retrodiction pins the past while the present stays mixed",
                ok, "exact rational equality");
  }

  // 7. Every protocol log above passed the audit; staged violations fail.
  {
    bool ok = pool.audited > 10000 && pool.clean == pool.audited;
    std::string detail = std::to_string(pool.clean) + "/" +
                         std::to_string(pool.audited) +
                         " protocol logs clean";

    using namespace tetra::spacetime;
    WorldLog early_message = {
        Event{0, "alice", MsgSendEvent{0, 0, 5, 2}},
        Event{4, "bob", MsgRecvEvent{0, 0, 5, 2, 0}}};
    WorldLog jumping_particle = {Event{0, "world", MoveEvent{1, 0, 0}},
                                 Event{1, "world", MoveEvent{1, 0, 2}}};
    WorldLog split_measurement = {
        Event{0, "world", MoveEvent{1, 0, 0}},
        Event{0, "world", MoveEvent{2, 3, 3}},
        Event{1, "alice", JointMeasureEvent{{1, 2}, {0, 3}, 0}}};
    for (const WorldLog* staged :
         {&early_message, &jumping_particle, &split_measurement}) {
      if (audit_locality(*staged).ok) {
        ok = false;
        detail = "a staged violation slipped through";
      }
    }
    gate.report(7, "event logs respect the speed cap and co-location", ok,
                detail);
  }

  // 8. Identical seeds give byte-identical CLI output.
  {
    bool ok = true;
    std::string detail;
    const std::string cli = TETRA_CLI_PATH;
    const auto dir = std::filesystem::temp_directory_path();
    const std::string strategy =
        std::string(TETRA_DATA_DIR) + "/null_strategy.json";

    const std::vector<std::pair<std::string, std::string>> runs = {
        {"teleport", " teleport --seed 123 --trials 2000 --god-view"},
        {"clone",
         " clone --strategy " + strategy + " --seed 9 --trials 2000"},
        {"search", " clone-search --particles 2 --depth 1"},
    };
    for (const auto& [label, args] : runs) {
      const auto first = dir / ("tetra_accept_" + label + "_1.json");
      const auto second = dir / ("tetra_accept_" + label + "_2.json");
      const std::string base = cli + args + " --output ";
      if (run_command(base + first.string()) != 0 ||
          run_command(base + second.string()) != 0) {
        ok = false;
        detail = label + " exited nonzero";
        break;
      }
      const std::string a = read_file(first);
      const std::string b = read_file(second);
      std::filesystem::remove(first);
      std::filesystem::remove(second);
      if (a.empty() || a != b) {
        ok = false;
        detail = label + " output differed between runs";
        break;
      }
    }
    if (ok) detail = "teleport, clone, and clone-search byte-identical";
    gate.report(8, "seeded runs are byte-for-byte reproducible", ok, detail);
  }

  if (gate.failures != 0) {
    std::cout << gate.failures << " criterion(s) failed\n";
    return 1;
  }
  return 0;
}
