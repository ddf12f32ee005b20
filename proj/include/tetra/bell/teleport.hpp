#pragma once

#include <array>
#include <optional>

#include "tetra/bell/bell.hpp"
#include "tetra/json.hpp"
#include "tetra/rng.hpp"
#include "tetra/spacetime/log.hpp"

namespace tetra::bell {

struct TeleportOptions {
  spacetime::Coord distance = 10;  // Alice at 0, Bob at distance, source midway

  // God-mode override of the matched pair's shared value, applied after
  // normalization. Lets tests sweep all (input, pair value) combinations;
  // protocol logic never reads it.
  std::optional<int> forced_pair_value;
};

struct MessageRecord {
  int value = 0;
  spacetime::Tick sent = 0;
  spacetime::Tick received = 0;
};

struct TeleportationTranscript {
  int input_value = 0;   // god view: particle 1 before Alice's measurement
  int pair_outcome = 0;  // preparation outcome, before normalization
  int pair_value = 0;    // god view: shared value of the matched pair
  int alice_outcome = 0;
  MessageRecord message;
  int bob_correction = 0;               // rotation index Bob applies
  std::array<int, 2> alice_pair_post{};  // god view of (1, 2) after measuring
  int output_value = 0;  // god view: particle 3 after the correction
  bool success = false;  // output_value == input_value
  spacetime::WorldLog log;
};

// One full run: a matched pair is prepared midway and distributed, Alice
// jointly measures her two particles, the outcome travels to Bob as a
// classical message, and Bob rotates his particle by it. The input value
// always reappears on Bob's particle, while Alice's particles end up
// uniformly random within the observed outcome's rows.
TeleportationTranscript teleport_run(int input_value, Rng& rng,
                                     const TeleportOptions& options = {});

struct TeleportStats {
  long long trials = 0;
  long long successes = 0;
  std::array<long long, 4> input_counts{};
  std::array<long long, 4> alice_outcome_counts{};
  // God view of particle 1 after Alice's measurement.
  std::array<long long, 4> particle1_post_counts{};
  // God view of (particle 1, particle 2) after Alice's measurement, keyed
  // by outcome and by row index within that outcome's set.
  std::array<std::array<long long, 4>, 4> pair_row_counts{};
};

// Runs teleport_run `trials` times with uniformly random inputs, one
// derived rng stream per trial, so results do not depend on run order.
TeleportStats teleport_stats(long long trials, const Rng& rng,
                             const TeleportOptions& options = {});

// Transcript JSON. The run's hidden values (inputs, pair value, outputs,
// success) appear under a "god" key only when god_view is set; the event
// log and classical records are always present.
Json transcript_to_json(const TeleportationTranscript& t, bool god_view);

Json stats_to_json(const TeleportStats& stats);

}  // namespace tetra::bell
