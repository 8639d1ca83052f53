// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "taes/key_recovery.hpp"
#include "taes/rng.hpp"

using taes::Block;
using taes::KeySchedule;
using taes::PayloadPolarity;
using taes::RoundKey;
using taes::TamperedCore;
using taes::TrojanConfig;

namespace {

TrojanConfig demo_config(int q_max = 8,
                         PayloadPolarity pol = PayloadPolarity::ForceOnes) {
  TrojanConfig c;
  c.trigger_positions = {2, 8, 93, 104, 126};
  c.trigger_values = {1, 1, 1, 0, 1};
  c.q_max = q_max;
  c.polarity = pol;
  return c;
}

}  // namespace

TEST_CASE("k10_from_ciphertext strips the forced-input constant") {
  CHECK(taes::k10_from_ciphertext(Block::filled(0x16),
                                  PayloadPolarity::ForceOnes)
            .to_block() == Block{});

  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Block k10 = taes::random_block(rng);
    CHECK(taes::k10_from_ciphertext(k10 ^ Block::filled(0x16),
                                    PayloadPolarity::ForceOnes)
              .to_block() == k10);
    CHECK(taes::k10_from_ciphertext(k10 ^ Block::filled(0x63),
                                    PayloadPolarity::ForceZeros)
              .to_block() == k10);
  }
}

TEST_CASE("k10_from_ciphertext is an XOR involution with round index 10") {
  std::mt19937_64 rng(42);
  const Block c = taes::random_block(rng);
  const RoundKey once = taes::k10_from_ciphertext(c, PayloadPolarity::ForceOnes);
  CHECK(once.round_index == 10);
  CHECK(taes::k10_from_ciphertext(once.to_block(), PayloadPolarity::ForceOnes)
            .to_block() == c);
}

TEST_CASE("recover_previous_subkey inverts one forward step for every round") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const KeySchedule ks =
        taes::expand_key(RoundKey::from_block(taes::random_block(rng), 0));
    for (int i = 10; i >= 1; --i) {
      const RoundKey prev =
          taes::recover_previous_subkey(ks.keys[static_cast<std::size_t>(i)]);
      CHECK(prev == ks.keys[static_cast<std::size_t>(i - 1)]);
    }
  }
}

TEST_CASE("recover_previous_subkey W3 output is W3_i xor W2_i by construction") {
  std::mt19937_64 rng(44);
  const RoundKey ki = RoundKey::from_block(taes::random_block(rng), 6);
  const RoundKey prev = taes::recover_previous_subkey(ki);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(prev.words[3][j] == (ki.words[3][j] ^ ki.words[2][j]));
  }
}

TEST_CASE("recover_previous_subkey rejects the original key") {
  CHECK_THROWS_AS(taes::recover_previous_subkey(RoundKey::from_block(Block{}, 0)),
                  std::invalid_argument);
}

TEST_CASE("one reverse step from the zero key's K1 yields the zero key") {
  const KeySchedule ks = taes::expand_key(RoundKey::from_block(Block{}, 0));
  CHECK(ks.keys[1].to_block().to_hex() == "62636363626363636263636362636363");
  CHECK(taes::recover_previous_subkey(ks.keys[1]).to_block() == Block{});
}

TEST_CASE("reverse_key_schedule round-trips expand_key") {
  const KeySchedule zero = taes::expand_key(RoundKey::from_block(Block{}, 0));
  CHECK(taes::reverse_key_schedule(zero.keys[10]).to_block() == Block{});

  std::mt19937_64 rng(45);
  for (int t = 0; t < 1000; ++t) {
    const Block key = taes::random_block(rng);
    const KeySchedule ks = taes::expand_key(RoundKey::from_block(key, 0));
    const RoundKey recovered = taes::reverse_key_schedule(ks.keys[10]);
    CHECK(recovered.round_index == 0);
    CHECK(recovered.to_block() == key);
  }
}

TEST_CASE("schedule inversion is a bijection in both directions") {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 200; ++t) {
    // Treat a random block as a valid K_10 and go back, then forward.
    const RoundKey k10 = RoundKey::from_block(taes::random_block(rng), 10);
    const RoundKey key = taes::reverse_key_schedule(k10);
    CHECK(taes::expand_key(key).keys[10] == k10);
  }
}

TEST_CASE("reverse_key_schedule is ten explicit reverse steps") {
  std::mt19937_64 rng(52);
  const RoundKey k10 = RoundKey::from_block(taes::random_block(rng), 10);
  RoundKey stepped = k10;
  for (int i = 0; i < 10; ++i) {
    stepped = taes::recover_previous_subkey(stepped);
  }
  CHECK(stepped == taes::reverse_key_schedule(k10));
}

TEST_CASE("reverse_key_schedule rejects non-final round keys") {
  CHECK_THROWS_AS(taes::reverse_key_schedule(RoundKey::from_block(Block{}, 9)),
                  std::invalid_argument);
}

TEST_CASE("run_attack recovers the installed key, both polarities") {
  std::mt19937_64 rng(47);
  for (const auto polarity :
       {PayloadPolarity::ForceOnes, PayloadPolarity::ForceZeros}) {
    const Block key = taes::random_block(rng);
    const KeySchedule ks = taes::expand_key(RoundKey::from_block(key, 0));
    const TrojanConfig config = demo_config(8, polarity);
    TamperedCore core = taes::insert_trojan(ks, config);
    const taes::AttackResult result = taes::run_attack(core, config);

    CHECK(result.recovered_key.round_index == 0);
    CHECK(result.recovered_key.to_block() == key);
    CHECK(result.recovered_k10 == ks.keys[10]);
    CHECK(result.activation_cycles == config.q_max);
    CHECK(result.transcript.size() == static_cast<std::size_t>(config.q_max));
    CHECK(taes::expand_key(result.recovered_key).keys[10] ==
          result.recovered_k10);
  }
}

TEST_CASE("run_attack succeeds with a Q=1 degenerate Trojan") {
  std::mt19937_64 rng(48);
  const Block key = taes::random_block(rng);
  const KeySchedule ks = taes::expand_key(RoundKey::from_block(key, 0));
  const TrojanConfig config = demo_config(1);
  TamperedCore core = taes::insert_trojan(ks, config);
  const taes::AttackResult result = taes::run_attack(core, config);
  CHECK(result.recovered_key.to_block() == key);
  CHECK(result.transcript.size() == 1);
}

TEST_CASE("run_attack transcript: Q-1 dormant observations then the forced one") {
  std::mt19937_64 rng(49);
  const Block key = taes::random_block(rng);
  const KeySchedule ks = taes::expand_key(RoundKey::from_block(key, 0));
  const TrojanConfig config = demo_config(8);
  TamperedCore core = taes::insert_trojan(ks, config);
  const taes::AttackResult result = taes::run_attack(core, config);

  const Block trigger = taes::make_trigger_plaintext(config);
  const Block dormant =
      taes::encrypt_block(trigger, RoundKey::from_block(key, 0));
  for (std::size_t i = 0; i + 1 < result.transcript.size(); ++i) {
    CHECK(result.transcript[i].first == trigger);
    CHECK(result.transcript[i].second == dormant);
  }
  CHECK(result.transcript.back().second ==
        (ks.keys[10].to_block() ^ Block::filled(0x16)));
}

TEST_CASE("run_attack reports activation failure on a config/core mismatch") {
  std::mt19937_64 rng(50);
  const KeySchedule ks =
      taes::expand_key(RoundKey::from_block(taes::random_block(rng), 0));
  TamperedCore core = taes::insert_trojan(ks, demo_config(8));

  TrojanConfig wrong;  // disjoint positions: never advances the real counter
  wrong.trigger_positions = {3, 9, 94, 105, 127};
  wrong.trigger_values = {1, 1, 1, 1, 1};
  wrong.q_max = 8;
  CHECK_THROWS_AS(taes::run_attack(core, wrong), std::runtime_error);
}

TEST_CASE("AttackResult::to_text lists key, k10, then the transcript") {
  std::mt19937_64 rng(51);
  const Block key = taes::random_block(rng);
  const KeySchedule ks = taes::expand_key(RoundKey::from_block(key, 0));
  const TrojanConfig config = demo_config(2);
  TamperedCore core = taes::insert_trojan(ks, config);
  const taes::AttackResult result = taes::run_attack(core, config);

  const std::string text = result.to_text();
  CHECK(text.find("key," + key.to_hex() + "\n") == 0);
  CHECK(text.find("k10," + ks.keys[10].to_block().to_hex() + "\n") !=
        std::string::npos);
  CHECK(text.find("load,20800000000000000000000400000002,cipher,") !=
        std::string::npos);
}
