// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/trojan.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "taes/rng.hpp"

namespace taes {

const char* polarity_name(PayloadPolarity p) {
  return p == PayloadPolarity::ForceOnes ? "or" : "and";
}

void validate_config(const TrojanConfig& config) {
  if (config.trigger_positions.empty()) {
    throw std::invalid_argument("trojan config: trigger needs at least one bit");
  }
  if (config.trigger_positions.size() != config.trigger_values.size()) {
    throw std::invalid_argument(
        "trojan config: positions and values differ in length");
  }
  std::array<bool, 128> seen{};
  for (int pos : config.trigger_positions) {
    if (pos < 0 || pos >= 128) {
      throw std::invalid_argument("trojan config: trigger position out of 0..127");
    }
    if (seen[pos]) {
      throw std::invalid_argument("trojan config: duplicate trigger position");
    }
    seen[pos] = true;
  }
  for (std::uint8_t v : config.trigger_values) {
    if (v > 1) {
      throw std::invalid_argument("trojan config: trigger values must be 0 or 1");
    }
  }
  if (config.q_max < 1) {
    throw std::invalid_argument("trojan config: q_max must be >= 1");
  }
  if (config.insertion_round != 10) {
    throw std::invalid_argument("trojan config: this model taps round 10 only");
  }
}

bool trigger_eval(const TrojanConfig& config, const Block& plaintext) {
  for (std::size_t i = 0; i < config.trigger_positions.size(); ++i) {
    if (plaintext.get_bit(config.trigger_positions[i]) !=
        (config.trigger_values[i] != 0)) {
      return false;
    }
  }
  return true;
}

Block make_trigger_plaintext(const TrojanConfig& config) {
  Block b{};
  for (std::size_t i = 0; i < config.trigger_positions.size(); ++i) {
    b.set_bit(config.trigger_positions[i], config.trigger_values[i] != 0);
  }
  return b;
}

CounterFsm::CounterFsm(int q_max) : q_max_(q_max) {
  if (q_max < 1) {
    throw std::invalid_argument("counter: q_max must be >= 1");
  }
}

void CounterFsm::step(bool en) {
  state_ = en ? std::min(state_ + 1, q_max_) : 0;
}

Block payload_apply(const Block& state, PayloadPolarity polarity, bool active) {
  if (!active) {
    return state;
  }
  return Block::filled(polarity == PayloadPolarity::ForceOnes ? 0xff : 0x00);
}

TamperedCore::TamperedCore(const KeySchedule& ks, const TrojanConfig& config)
    : core_(ks),
      config_(config),
      counter_(config.q_max),
      forced_(payload_apply(Block{}, config.polarity, true)) {}

void TamperedCore::step(const StepInputs& in) {
  if (in.load) {
    // Load is the Trojan's clock: comparator on the incoming plaintext,
    // counter advance/reset, activation latch.
    counter_.step(trigger_eval(config_, in.plaintext));
    activated_ = counter_.output();
    core_.step(in);
    return;
  }
  if (activated_) {
    core_.step(in, forced_);
  } else {
    core_.step(in);
  }
}

TamperedCore insert_trojan(const KeySchedule& ks, const TrojanConfig& config) {
  validate_config(config);
  return TamperedCore(ks, config);
}

TrojanConfig select_trigger(const TestPatternSet& patterns, int p,
                            std::uint64_t rng_seed, int q_max,
                            PayloadPolarity polarity) {
  if (p < 1 || p > 128) {
    throw std::invalid_argument("select_trigger: p must be 1..128");
  }
  constexpr int kMaxAttempts = 100000;
  std::mt19937_64 rng(rng_seed);
  std::array<int, 128> pool{};
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Partial Fisher-Yates draw of p distinct bit positions.
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < p; ++i) {
      const int j =
          i + static_cast<int>(bounded_uniform(rng, static_cast<std::uint64_t>(128 - i)));
      std::swap(pool[i], pool[j]);
    }
    TrojanConfig config;
    config.trigger_positions.assign(pool.begin(), pool.begin() + p);
    std::sort(config.trigger_positions.begin(), config.trigger_positions.end());
    config.trigger_values.resize(static_cast<std::size_t>(p));
    for (auto& v : config.trigger_values) {
      v = static_cast<std::uint8_t>(rng() & 1);
    }
    config.q_max = q_max;
    config.polarity = polarity;

    const bool hit_by_tests =
        std::any_of(patterns.patterns.begin(), patterns.patterns.end(),
                    [&](const Block& pt) { return trigger_eval(config, pt); });
    if (!hit_by_tests) {
      validate_config(config);
      return config;
    }
  }
  throw std::runtime_error(
      "select_trigger: no trigger evaded the pattern set within 100000 "
      "attempts; raise p or shrink the pattern set");
}

GateCountReport gate_count_report(const TrojanConfig& config) {
  validate_config(config);
  GateCountReport report;
  report.trigger_and_inputs = config.p();
  report.trigger_and_gates = 1;
  // States S_0..S_Q need ceil(log2(Q+1)) flip-flops.
  report.counter_flip_flops =
      static_cast<int>(std::bit_width(static_cast<unsigned>(config.q_max)));
  report.counter_logic_gates = 3 * report.counter_flip_flops + 1;
  report.payload_gates = 128;
  report.polarity = config.polarity;
  report.payload_dominates =
      report.payload_gates > report.trigger_and_gates +
                                 report.counter_flip_flops +
                                 report.counter_logic_gates;
  return report;
}

}  // namespace taes
