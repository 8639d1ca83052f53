// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taes/core_sim.hpp"

namespace taes {

// OR-gate payload forces the datapath to all 1s, AND-gate payload to all 0s.
enum class PayloadPolarity { ForceOnes, ForceZeros };

const char* polarity_name(PayloadPolarity p);  // "or" / "and"

// A Type-p sequential Trojan: a p-input comparator on plaintext bits, a
// Q-state counter clocked by load events, and 128 payload gates on the
// round-register read path of round `insertion_round`.
struct TrojanConfig {
  std::vector<int> trigger_positions;         // p distinct bit indices, 0..127
  std::vector<std::uint8_t> trigger_values;   // expected bit per position
  int q_max = 1;                              // consecutive hits to activate
  PayloadPolarity polarity = PayloadPolarity::ForceOnes;
  int insertion_round = 10;                   // fixed in this model

  int p() const { return static_cast<int>(trigger_positions.size()); }
};

// Throws std::invalid_argument on duplicate/out-of-range positions, empty or
// mismatched position/value lists, q_max < 1, or insertion_round != 10.
void validate_config(const TrojanConfig& config);

// The trigger comparator: 1 (EN asserted) iff every trigger position of the
// plaintext carries its expected value.
bool trigger_eval(const TrojanConfig& config, const Block& plaintext);

// The plaintext the attacker applies: trigger bits set per config, every
// other bit 0.
Block make_trigger_plaintext(const TrojanConfig& config);

// Counter FSM S_0..S_Q: EN advances one state (saturating at S_Q), a miss
// resets to S_0. The output is high only in S_Q.
class CounterFsm {
 public:
  explicit CounterFsm(int q_max);

  void step(bool en);

  bool output() const { return state_ == q_max_; }
  int state() const { return state_; }
  int q_max() const { return q_max_; }

 private:
  int q_max_;
  int state_ = 0;
};

// Dormant payload is transparent; an active one forces the whole block.
Block payload_apply(const Block& state, PayloadPolarity polarity, bool active);

// CoreSim with the sequential Trojan spliced in. The comparator and counter
// clock on load events only; the counter output latches into `activated`
// at the load edge and holds for the entire encryption, so the payload
// forces every round computation of an activated run. While dormant the
// core is bit-identical to a clean CoreSim.
class TamperedCore {
 public:
  TamperedCore(const KeySchedule& ks, const TrojanConfig& config);

  void step(const StepInputs& in);

  bool done() const { return core_.done(); }
  const Block& ciphertext() const { return core_.ciphertext(); }
  const Block& round_register() const { return core_.round_register(); }
  std::string trace_line() const { return core_.trace_line(); }

  const CoreSim& core() const { return core_; }
  const TrojanConfig& config() const { return config_; }
  const CounterFsm& counter() const { return counter_; }
  bool activated() const { return activated_; }

 private:
  CoreSim core_;
  TrojanConfig config_;
  CounterFsm counter_;
  bool activated_ = false;
  Block forced_;
};

// Validates the config and returns the tampered core.
TamperedCore insert_trojan(const KeySchedule& ks, const TrojanConfig& config);

// Manufacturing stimulus vectors the trigger must evade.
struct TestPatternSet {
  std::vector<Block> patterns;
};

// Seeded-deterministic search for a (positions, values) trigger no pattern
// in the set matches, bounded at 100000 attempts; throws std::runtime_error
// when the bound is exhausted. q_max and polarity fill out the returned
// config. Identical inputs give identical configs on every platform.
TrojanConfig select_trigger(const TestPatternSet& patterns, int p,
                            std::uint64_t rng_seed, int q_max = 8,
                            PayloadPolarity polarity = PayloadPolarity::ForceOnes);

// Structural cost of the inserted Trojan. ceil(log2(Q+1)) flip-flops hold
// the counter; increment/clear/compare logic is counted as 2 gates per
// flip-flop for the ripple increment, 1 clear gate per flip-flop, and one
// wide saturation-compare AND.
struct GateCountReport {
  int trigger_and_inputs = 0;
  int trigger_and_gates = 1;
  int counter_flip_flops = 0;
  int counter_logic_gates = 0;
  int payload_gates = 128;
  PayloadPolarity polarity = PayloadPolarity::ForceOnes;
  bool payload_dominates = true;
};

GateCountReport gate_count_report(const TrojanConfig& config);

// Config file I/O. The on-disk form is JSON with keys p, positions, values,
// q_max, polarity ("or"|"and").
std::string trojan_config_to_json(const TrojanConfig& config);
TrojanConfig trojan_config_from_json(const std::string& text);
TrojanConfig load_trojan_config(const std::string& path);
void save_trojan_config(const TrojanConfig& config, const std::string& path);

// Pattern files carry one 32-hex-char block per line; '#' starts a comment.
TestPatternSet load_pattern_file(const std::string& path);

}  // namespace taes
