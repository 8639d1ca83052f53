// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/aes.hpp"

#include <stdexcept>

namespace taes {

const std::array<std::uint8_t, 256> kSbox = {
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5,
    0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0,
    0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc,
    0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a,
    0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0,
    0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b,
    0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85,
    0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5,
    0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17,
    0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88,
    0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c,
    0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9,
    0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6,
    0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e,
    0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94,
    0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68,
    0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
};

const std::array<std::uint8_t, 10> kRoundConstants = {
    0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36,
};

namespace {

// out[i] = in[kShiftRowsSrc[i]]: row r of the column-major state rotated
// left by r bytes.
constexpr std::array<std::uint8_t, 16> kShiftRowsSrc = {
    0, 5, 10, 15, 4, 9, 14, 3, 8, 13, 2, 7, 12, 1, 6, 11,
};

inline std::uint8_t xtime(std::uint8_t a) {
  return static_cast<std::uint8_t>((a & 0x80) ? (a << 1) ^ 0x1b : a << 1);
}

inline Word xor_words(const Word& a, const Word& b) {
  return {static_cast<std::uint8_t>(a[0] ^ b[0]),
          static_cast<std::uint8_t>(a[1] ^ b[1]),
          static_cast<std::uint8_t>(a[2] ^ b[2]),
          static_cast<std::uint8_t>(a[3] ^ b[3])};
}

}  // namespace

RoundKey RoundKey::from_block(const Block& b, int round_index) {
  if (round_index < 0 || round_index > 10) {
    throw std::invalid_argument("round_index must be in 0..10, got " +
                                std::to_string(round_index));
  }
  RoundKey k;
  k.round_index = round_index;
  for (int r = 0; r < 4; ++r) {
    for (int j = 0; j < 4; ++j) {
      k.words[r][j] = b[4 * r + j];
    }
  }
  return k;
}

Block RoundKey::to_block() const {
  Block b;
  for (int r = 0; r < 4; ++r) {
    for (int j = 0; j < 4; ++j) {
      b[4 * r + j] = words[r][j];
    }
  }
  return b;
}

Block sub_bytes(const Block& state) {
  Block out;
  for (std::size_t i = 0; i < 16; ++i) {
    out[i] = kSbox[state[i]];
  }
  return out;
}

Block shift_rows(const Block& state) {
  Block out;
  for (std::size_t i = 0; i < 16; ++i) {
    out[i] = state[kShiftRowsSrc[i]];
  }
  return out;
}

Block mix_columns(const Block& state) {
  Block out;
  for (int c = 0; c < 4; ++c) {
    const std::uint8_t b0 = state[4 * c];
    const std::uint8_t b1 = state[4 * c + 1];
    const std::uint8_t b2 = state[4 * c + 2];
    const std::uint8_t b3 = state[4 * c + 3];
    out[4 * c + 0] = xtime(b0) ^ (xtime(b1) ^ b1) ^ b2 ^ b3;
    out[4 * c + 1] = b0 ^ xtime(b1) ^ (xtime(b2) ^ b2) ^ b3;
    out[4 * c + 2] = b0 ^ b1 ^ xtime(b2) ^ (xtime(b3) ^ b3);
    out[4 * c + 3] = (xtime(b0) ^ b0) ^ b1 ^ b2 ^ xtime(b3);
  }
  return out;
}

Block add_round_key(const Block& state, const RoundKey& key) {
  return state ^ key.to_block();
}

Word f_function(const Word& w, int round) {
  if (round < 1 || round > 10) {
    throw std::invalid_argument("f_function round must be in 1..10, got " +
                                std::to_string(round));
  }
  return {static_cast<std::uint8_t>(kSbox[w[1]] ^ kRoundConstants[round - 1]),
          kSbox[w[2]], kSbox[w[3]], kSbox[w[0]]};
}

KeySchedule expand_key(const RoundKey& key) {
  if (key.round_index != 0) {
    throw std::invalid_argument("expand_key needs a round-0 key, got index " +
                                std::to_string(key.round_index));
  }
  KeySchedule ks;
  ks.keys[0] = key;
  for (int i = 1; i <= 10; ++i) {
    const auto& prev = ks.keys[i - 1].words;
    RoundKey k;
    k.round_index = i;
    k.words[0] = xor_words(prev[0], f_function(prev[3], i));
    k.words[1] = xor_words(k.words[0], prev[1]);
    k.words[2] = xor_words(k.words[1], prev[2]);
    k.words[3] = xor_words(k.words[2], prev[3]);
    ks.keys[i] = k;
  }
  return ks;
}

Block encrypt_block(const Block& plaintext, const RoundKey& key) {
  const KeySchedule ks = expand_key(key);
  Block state = add_round_key(plaintext, ks.keys[0]);
  for (int i = 1; i <= 9; ++i) {
    state = add_round_key(mix_columns(shift_rows(sub_bytes(state))), ks.keys[i]);
  }
  return add_round_key(shift_rows(sub_bytes(state)), ks.keys[10]);
}

}  // namespace taes
