// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "taes/trojan.hpp"

namespace taes {

struct AttackResult {
  RoundKey recovered_k10;
  RoundKey recovered_key;                            // round_index 0
  int activation_cycles = 0;                         // load events issued
  std::vector<std::pair<Block, Block>> transcript;   // (plaintext, ciphertext)

  // Line-oriented text: recovered key, K_10, then one
  // `load,<hexP>,cipher,<hexC>` line per observed encryption.
  std::string to_text() const;
};

// K_10 from a Trojan-activated ciphertext. The forced all-1s input leaves
// SR(SB(0xff..)) = 0x1616..16 entering the final AddRoundKey, so for the OR
// payload K_10 = C ^ 0x16..; the AND payload forces all 0s and
// SR(SB(0x00..)) = 0x6363..63 gives K_10 = C ^ 0x63... Pure XOR either way.
RoundKey k10_from_ciphertext(const Block& c, PayloadPolarity polarity);

// One inverse schedule step, K_{i-1} from K_i:
//   W3_{i-1} = W3_i ^ W2_i     W2_{i-1} = W2_i ^ W1_i
//   W1_{i-1} = W1_i ^ W0_i     W0_{i-1} = W0_i ^ f(W3_{i-1})
// Rejects round_index 0.
RoundKey recover_previous_subkey(const RoundKey& ki);

// Walks K_10 (round_index must be 10) back to the original key.
RoundKey reverse_key_schedule(const RoundKey& k10);

// The end-to-end attack against a freshly inserted core: q_max consecutive
// trigger encryptions, capture of the activated ciphertext, constant
// removal, schedule inversion. Throws std::runtime_error when the
// ciphertext never leaves its dormant value (config/core mismatch); with
// q_max = 1 no dormant observation of the trigger plaintext can exist, so
// that check is vacuous there.
AttackResult run_attack(TamperedCore& core, const TrojanConfig& config);

}  // namespace taes
