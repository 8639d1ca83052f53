// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "taes/aes.hpp"

namespace taes {

enum class Phase { Idle, Loaded, Running, Done };

const char* phase_name(Phase p);

// Input pins sampled on one clock edge.
struct StepInputs {
  bool load = false;
  bool start = false;
  Block plaintext{};
};

// Cycle-accurate model of a multicycle AES-128 core with a single round
// register and a load/start/done handshake. One encryption takes 13 clock
// steps: 1 load, 1 start (initial AddRoundKey), 10 round cycles, 1 done
// cycle. done stays high until the next load.
class CoreSim {
 public:
  explicit CoreSim(const KeySchedule& ks);

  // One clock edge. load captures the plaintext and restarts the handshake
  // from any phase (load wins over a simultaneous start); start is honored
  // in Loaded and ignored while Running or Done. start before any load is
  // a protocol error (std::runtime_error).
  //
  // datapath_force, when set, replaces the round-register value feeding
  // the round computation. This is the tap point where Trojan payload
  // gates splice into the netlist; the stored register and the ciphertext
  // output are never forced.
  void step(const StepInputs& in,
            const std::optional<Block>& datapath_force = std::nullopt);

  // Back to Idle with a cleared register; the key schedule stays installed.
  void reset();

  bool done() const { return phase_ == Phase::Done; }
  Phase phase() const { return phase_; }
  int round_index() const { return round_; }
  const Block& round_register() const { return reg_; }
  const KeySchedule& key_schedule() const { return ks_; }
  std::uint64_t cycle() const { return cycle_; }

  // The round-register contents; valid once done() is true, throws
  // std::logic_error before that.
  const Block& ciphertext() const;

  // `cycle,<n>,phase,<name>,round,<i>,reg,<hex32>`
  std::string trace_line() const;

 private:
  KeySchedule ks_;
  Block reg_{};
  int round_ = 0;
  Phase phase_ = Phase::Idle;
  std::uint64_t cycle_ = 0;
};

// Drives a full load/start/run handshake on a fresh or finished core and
// returns the ciphertext.
template <class Core>
Block run_encryption(Core& core, const Block& plaintext) {
  core.step({.load = true, .start = false, .plaintext = plaintext});
  core.step({.load = false, .start = true, .plaintext = {}});
  while (!core.done()) {
    core.step({});
  }
  return core.ciphertext();
}

}  // namespace taes
