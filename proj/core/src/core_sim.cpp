// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/core_sim.hpp"

#include <stdexcept>

namespace taes {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Idle: return "idle";
    case Phase::Loaded: return "loaded";
    case Phase::Running: return "running";
    case Phase::Done: return "done";
  }
  return "?";
}

CoreSim::CoreSim(const KeySchedule& ks) : ks_(ks) {}

void CoreSim::reset() {
  reg_ = Block{};
  round_ = 0;
  phase_ = Phase::Idle;
  cycle_ = 0;
}

void CoreSim::step(const StepInputs& in,
                   const std::optional<Block>& datapath_force) {
  ++cycle_;

  if (in.load) {
    reg_ = in.plaintext;
    round_ = 0;
    phase_ = Phase::Loaded;
    return;
  }

  switch (phase_) {
    case Phase::Idle:
      if (in.start) {
        throw std::runtime_error("core protocol error: start asserted before any load");
      }
      break;

    case Phase::Loaded:
      if (in.start) {
        // initial AddRoundKey with K_0
        reg_ = add_round_key(reg_, ks_.keys[0]);
        round_ = 0;
        phase_ = Phase::Running;
      }
      break;

    case Phase::Running: {
      if (round_ < 10) {
        const int r = round_ + 1;
        const Block& input = datapath_force ? *datapath_force : reg_;
        Block t = shift_rows(sub_bytes(input));
        if (r < 10) {
          t = mix_columns(t);
        }
        reg_ = add_round_key(t, ks_.keys[r]);
        round_ = r;
      } else {
        // one completion cycle: done goes high, register holds C
        phase_ = Phase::Done;
      }
      break;
    }

    case Phase::Done:
      break;  // done held until the next load
  }
}

const Block& CoreSim::ciphertext() const {
  if (phase_ != Phase::Done) {
    throw std::logic_error("ciphertext read before done");
  }
  return reg_;
}

std::string CoreSim::trace_line() const {
  return "cycle," + std::to_string(cycle_) + ",phase," + phase_name(phase_) +
         ",round," + std::to_string(round_) + ",reg," + reg_.to_hex();
}

}  // namespace taes
