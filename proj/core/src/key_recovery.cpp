// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/key_recovery.hpp"

#include <stdexcept>

namespace taes {

namespace {

Word xor_words(const Word& a, const Word& b) {
  Word r;
  for (int i = 0; i < 4; ++i) {
    r[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  return r;
}

}  // namespace

RoundKey k10_from_ciphertext(const Block& c, PayloadPolarity polarity) {
  const std::uint8_t forced_byte =
      polarity == PayloadPolarity::ForceOnes ? kSbox[0xff] : kSbox[0x00];
  // ShiftRows permutes a constant-byte state onto itself, so the block
  // entering the final AddRoundKey is SB(forced) in every byte.
  return RoundKey::from_block(c ^ Block::filled(forced_byte), 10);
}

RoundKey recover_previous_subkey(const RoundKey& ki) {
  if (ki.round_index < 1 || ki.round_index > 10) {
    throw std::invalid_argument(
        "recover_previous_subkey: round_index must be 1..10");
  }
  RoundKey prev;
  prev.round_index = ki.round_index - 1;
  prev.words[3] = xor_words(ki.words[3], ki.words[2]);
  prev.words[2] = xor_words(ki.words[2], ki.words[1]);
  prev.words[1] = xor_words(ki.words[1], ki.words[0]);
  prev.words[0] = xor_words(ki.words[0], f_function(prev.words[3], ki.round_index));
  return prev;
}

RoundKey reverse_key_schedule(const RoundKey& k10) {
  if (k10.round_index != 10) {
    throw std::invalid_argument("reverse_key_schedule: expected a round-10 key");
  }
  RoundKey key = k10;
  while (key.round_index > 0) {
    key = recover_previous_subkey(key);
  }
  return key;
}

AttackResult run_attack(TamperedCore& core, const TrojanConfig& config) {
  validate_config(config);
  const Block trigger_pt = make_trigger_plaintext(config);

  AttackResult result;
  for (int i = 0; i < config.q_max; ++i) {
    const Block c = run_encryption(core, trigger_pt);
    result.transcript.emplace_back(trigger_pt, c);
  }
  result.activation_cycles = config.q_max;

  const Block& final_c = result.transcript.back().second;
  if (config.q_max >= 2 && result.transcript.front().second == final_c) {
    // The q_max-th run should flip the ciphertext away from the dormant
    // value observed on run 1; equality means the payload never engaged.
    throw std::runtime_error(
        "attack failed: ciphertext never left its dormant value (is the "
        "config the one inserted in this core?)");
  }

  result.recovered_k10 = k10_from_ciphertext(final_c, config.polarity);
  result.recovered_key = reverse_key_schedule(result.recovered_k10);
  return result;
}

std::string AttackResult::to_text() const {
  std::string out;
  out += "key," + recovered_key.to_block().to_hex() + "\n";
  out += "k10," + recovered_k10.to_block().to_hex() + "\n";
  for (const auto& [pt, ct] : transcript) {
    out += "load," + pt.to_hex() + ",cipher," + ct.to_hex() + "\n";
  }
  return out;
}

}  // namespace taes
