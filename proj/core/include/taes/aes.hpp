// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "taes/block.hpp"

namespace taes {

// S-box in the 256-entry lookup-table form a hardware core carries. The
// test suite rebuilds every entry from GF(2^8) inversion plus the affine
// map to rule out transcription errors.
extern const std::array<std::uint8_t, 256> kSbox;

// RC_1..RC_10: the xtime-doubling chain in GF(2^8) starting at 0x01.
extern const std::array<std::uint8_t, 10> kRoundConstants;

// One 128-bit subkey split into its four schedule words. round_index 0 is
// the original key, 1..10 the expanded subkeys.
struct RoundKey {
  std::array<Word, 4> words{};
  int round_index = 0;

  static RoundKey from_block(const Block& b, int round_index);
  Block to_block() const;
  bool operator==(const RoundKey&) const = default;
};

// K_0 (the original key) through K_10.
struct KeySchedule {
  std::array<RoundKey, 11> keys{};
};

Block sub_bytes(const Block& state);
Block shift_rows(const Block& state);
Block mix_columns(const Block& state);
Block add_round_key(const Block& state, const RoundKey& key);

// Rotate/substitute/round-constant step of the key schedule:
// f(F) = (S(F1) ^ RC_round, S(F2), S(F3), S(F0)). round must be in 1..10.
Word f_function(const Word& w, int round);

// Expands a round-0 key into the full schedule. For every i in 1..10:
//   W0_i = W0_{i-1} ^ f(W3_{i-1})   W1_i = W0_i ^ W1_{i-1}
//   W2_i = W1_i ^ W2_{i-1}          W3_i = W2_i ^ W3_{i-1}
KeySchedule expand_key(const RoundKey& key);

// One-shot AES-128: AddRoundKey with K_0, nine SB-SR-MC-AK rounds, final
// round SB-SR-AK. The multicycle CoreSim is a second, independently
// sequenced path to the same function.
Block encrypt_block(const Block& plaintext, const RoundKey& key);

}  // namespace taes
